#pragma once

#include <optional>
#include <string>
#include <vector>

#include "t2hflts/trapezoid.hpp"

namespace t2h {

struct LinguisticTerm {
    std::string label;       // short form, e.g. "M"
    std::string long_label;  // optional long form, e.g. "moderate"
    IT2TrFN band;
};

// Ordered scale s_0..s_g.  Ordering is by construction; validate() checks it
// against the centroids so a bad configuration file cannot slip through.
struct LinguisticTermSet {
    std::vector<LinguisticTerm> terms;

    int g() const { return int(terms.size()) - 1; }
    const LinguisticTerm& term(int i) const;
    std::optional<int> find_label(const std::string& text) const;
    void validate() const;
};

struct CLE {
    enum class Shape { Single, LessThan, MoreThan, Between };
    Shape shape = Shape::Single;
    int i = 0;
    int j = 0;  // second index, meaningful for Between only

    bool operator==(const CLE&) const = default;
};

// Consecutive run of term indices [lo..hi] on a scale with top index g.
// lo > hi encodes the empty set.
struct T2HFLTS {
    int g = 0;
    int lo = 0;
    int hi = -1;

    static T2HFLTS range(int g, int lo, int hi);
    static T2HFLTS empty(int g) { return T2HFLTS{g, 0, -1}; }

    bool is_empty() const { return lo > hi; }
    int size() const { return is_empty() ? 0 : hi - lo + 1; }
    bool contains(int k) const { return !is_empty() && lo <= k && k <= hi; }
    std::vector<int> indices() const;

    bool operator==(const T2HFLTS&) const = default;
};

CLE parse_cle(const std::string& text, const LinguisticTermSet& lts);
std::string render(const CLE& cle, const LinguisticTermSet& lts);

T2HFLTS transform(const CLE& cle, int g);

T2HFLTS complement(const T2HFLTS& h);

// Union / intersection may leave the consecutive world, so they return plain
// sorted index sets.  as_consecutive() lifts a set back when possible.
std::vector<int> set_union(const T2HFLTS& h1, const T2HFLTS& h2);
std::vector<int> set_intersection(const T2HFLTS& h1, const T2HFLTS& h2);
std::optional<T2HFLTS> as_consecutive(const std::vector<int>& indices, int g);

}  // namespace t2h
