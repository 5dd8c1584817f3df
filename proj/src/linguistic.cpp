#include "t2hflts/linguistic.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "t2hflts/errors.hpp"
#include "t2hflts/typered.hpp"

namespace t2h {

namespace {

std::string normalize(const std::string& text) {
    std::string out;
    bool in_space = true;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!in_space && !out.empty()) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(char(std::tolower(static_cast<unsigned char>(ch))));
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

std::string known_labels(const LinguisticTermSet& lts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < lts.terms.size(); ++i) {
        if (i) os << ", ";
        os << lts.terms[i].label;
        if (!lts.terms[i].long_label.empty()) os << " (" << lts.terms[i].long_label << ")";
    }
    return os.str();
}

int resolve_label(const std::string& raw, const LinguisticTermSet& lts) {
    auto idx = lts.find_label(raw);
    if (!idx)
        throw ValidationError("unknown term label '" + raw + "'; known labels: " +
                              known_labels(lts));
    return *idx;
}

}  // namespace

const LinguisticTerm& LinguisticTermSet::term(int i) const {
    if (i < 0 || i > g())
        throw ValidationError("term index " + std::to_string(i) + " outside [0, " +
                              std::to_string(g()) + "]");
    return terms[std::size_t(i)];
}

std::optional<int> LinguisticTermSet::find_label(const std::string& text) const {
    const std::string key = normalize(text);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (normalize(terms[i].label) == key) return int(i);
        if (!terms[i].long_label.empty() && normalize(terms[i].long_label) == key)
            return int(i);
    }
    return std::nullopt;
}

void LinguisticTermSet::validate() const {
    if (g() < 1) throw ValidationError("term set needs at least two terms");
    std::set<std::string> seen;
    for (const auto& t : terms) {
        if (t.label.empty()) throw ValidationError("term with empty label");
        if (!seen.insert(normalize(t.label)).second)
            throw ValidationError("duplicate term label '" + t.label + "'");
        if (!t.long_label.empty() && !seen.insert(normalize(t.long_label)).second)
            throw ValidationError("duplicate term label '" + t.long_label + "'");
        if (t.band.umf.a < -1e-12 || t.band.umf.d > 1.0 + 1e-12)
            throw ValidationError("term '" + t.label + "' leaves the unit interval");
    }
    double prev = -1.0;
    for (const auto& t : terms) {
        const double c = centroid_mid(t.band);
        if (c < prev - 1e-9)
            throw ValidationError("term '" + t.label +
                                  "' breaks the centroid ordering of the scale");
        prev = c;
    }
}

T2HFLTS T2HFLTS::range(int g, int lo, int hi) {
    if (g < 1) throw ValidationError("scale top index must be >= 1");
    if (lo > hi) return empty(g);
    if (lo < 0 || hi > g)
        throw ValidationError("index run [" + std::to_string(lo) + ".." + std::to_string(hi) +
                              "] outside [0, " + std::to_string(g) + "]");
    return T2HFLTS{g, lo, hi};
}

std::vector<int> T2HFLTS::indices() const {
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
}

CLE parse_cle(const std::string& text, const LinguisticTermSet& lts) {
    const std::string s = normalize(text);
    if (s.empty()) throw ValidationError("empty expression");

    const std::string between = "between ";
    const std::string less = "less than ";
    const std::string more = "more than ";

    if (s.rfind(between, 0) == 0) {
        const std::string rest = s.substr(between.size());
        const std::string sep = " and ";
        const auto pos = rest.find(sep);
        if (pos == std::string::npos)
            throw ValidationError("malformed expression '" + text +
                                  "': expected 'between <term> and <term>'");
        const int i = resolve_label(rest.substr(0, pos), lts);
        const int j = resolve_label(rest.substr(pos + sep.size()), lts);
        if (i > j)
            throw ValidationError("reversed range in '" + text + "': '" +
                                  lts.term(i).label + "' comes after '" + lts.term(j).label +
                                  "' on the scale");
        return CLE{CLE::Shape::Between, i, j};
    }
    if (s.rfind(less, 0) == 0) {
        const int i = resolve_label(s.substr(less.size()), lts);
        return CLE{CLE::Shape::LessThan, i, i};
    }
    if (s.rfind(more, 0) == 0) {
        const int i = resolve_label(s.substr(more.size()), lts);
        return CLE{CLE::Shape::MoreThan, i, i};
    }
    const int i = resolve_label(s, lts);
    return CLE{CLE::Shape::Single, i, i};
}

std::string render(const CLE& cle, const LinguisticTermSet& lts) {
    switch (cle.shape) {
        case CLE::Shape::Single: return lts.term(cle.i).label;
        case CLE::Shape::LessThan: return "less than " + lts.term(cle.i).label;
        case CLE::Shape::MoreThan: return "more than " + lts.term(cle.i).label;
        case CLE::Shape::Between:
            return "between " + lts.term(cle.i).label + " and " + lts.term(cle.j).label;
    }
    throw ValidationError("unreachable expression shape");
}

T2HFLTS transform(const CLE& cle, int g) {
    switch (cle.shape) {
        case CLE::Shape::Single: return T2HFLTS::range(g, cle.i, cle.i);
        case CLE::Shape::LessThan: return T2HFLTS::range(g, 0, cle.i);
        case CLE::Shape::MoreThan: return T2HFLTS::range(g, cle.i, g);
        case CLE::Shape::Between: return T2HFLTS::range(g, cle.i, cle.j);
    }
    throw ValidationError("unreachable expression shape");
}

T2HFLTS complement(const T2HFLTS& h) {
    if (h.is_empty()) return h;
    return T2HFLTS::range(h.g, h.g - h.hi, h.g - h.lo);
}

std::vector<int> set_union(const T2HFLTS& h1, const T2HFLTS& h2) {
    if (h1.g != h2.g)
        throw ValidationError("set operation across different scales (g=" +
                              std::to_string(h1.g) + " vs g=" + std::to_string(h2.g) + ")");
    std::set<int> acc;
    for (int k : h1.indices()) acc.insert(k);
    for (int k : h2.indices()) acc.insert(k);
    return {acc.begin(), acc.end()};
}

std::vector<int> set_intersection(const T2HFLTS& h1, const T2HFLTS& h2) {
    if (h1.g != h2.g)
        throw ValidationError("set operation across different scales (g=" +
                              std::to_string(h1.g) + " vs g=" + std::to_string(h2.g) + ")");
    std::vector<int> out;
    for (int k : h1.indices())
        if (h2.contains(k)) out.push_back(k);
    return out;
}

std::optional<T2HFLTS> as_consecutive(const std::vector<int>& indices, int g) {
    if (indices.empty()) return T2HFLTS::empty(g);
    for (std::size_t k = 1; k < indices.size(); ++k)
        if (indices[k] != indices[k - 1] + 1) return std::nullopt;
    return T2HFLTS::range(g, indices.front(), indices.back());
}

}  // namespace t2h
