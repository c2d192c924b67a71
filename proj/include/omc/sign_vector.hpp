#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "omc/error.hpp"

namespace omc {

// Ground sets are indexed 1..m at every interface. Capacity is a compile-time
// constant; longer ground sets are rejected, never truncated.
#ifndef OMC_MASK_WORDS
#define OMC_MASK_WORDS 1
#endif
inline constexpr int kMaskWords = OMC_MASK_WORDS;
inline constexpr int kMaxGroundSetSize = 64 * kMaskWords;

enum class Sign : signed char { minus = -1, zero = 0, plus = 1 };

constexpr Sign opposite(Sign s) {
    return static_cast<Sign>(-static_cast<signed char>(s));
}

char sign_char(Sign s);
Sign sign_from_char(char c); // accepts '+', '-', '0'

// Subset of [1,m] stored as a bit mask (bit e-1 <=> element e).
class ElementSet {
  public:
    ElementSet() = default;

    static ElementSet full(int m);
    static ElementSet single(int e);
    static ElementSet interval(int lo, int hi); // {lo,...,hi}, empty if lo > hi
    static ElementSet of(std::initializer_list<int> elements);
    static ElementSet of(const std::vector<int>& elements);

    bool contains(int e) const;
    void insert(int e);
    void erase(int e);

    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<int> elements() const; // ascending

    bool subset_of(const ElementSet& other) const;
    bool intersects(const ElementSet& other) const;

    ElementSet united(const ElementSet& o) const;
    ElementSet intersected(const ElementSet& o) const;
    ElementSet minus(const ElementSet& o) const;
    ElementSet sym_diff(const ElementSet& o) const;

    bool operator==(const ElementSet& o) const { return words_ == o.words_; }
    auto operator<=>(const ElementSet& o) const = default;

    std::uint64_t word(int i) const { return words_[static_cast<std::size_t>(i)]; }

  private:
    static void check_element(int e);
    std::array<std::uint64_t, kMaskWords> words_{};
};

// Fixed-length word over {-,0,+}; encoded as two disjoint masks.
class SignVector {
  public:
    SignVector() = default;
    explicit SignVector(int m); // all-zero vector of length m

    static SignVector parse(std::string_view text);
    static SignVector all_plus(int m);
    static SignVector all_minus(int m);
    static SignVector from_signs(const std::vector<Sign>& signs);

    int size() const { return m_; }
    Sign at(int e) const; // 1-based
    void set(int e, Sign s);

    const ElementSet& positive_part() const { return plus_; }
    const ElementSet& negative_part() const { return minus_; }
    ElementSet support() const { return plus_.united(minus_); }
    ElementSet zero_set() const;

    bool is_zero() const { return plus_.empty() && minus_.empty(); }
    bool is_nonnegative() const { return minus_.empty(); }
    bool is_nonpositive() const { return plus_.empty(); }

    SignVector negated() const;
    SignVector reoriented(const ElementSet& a) const; // requires a subset of [1,m]
    SignVector composed_with(const SignVector& y) const;
    ElementSet separation_set(const SignVector& y) const;
    bool conforms_to(const SignVector& y) const;
    bool leq(const SignVector& y) const; // product partial order
    SignVector restricted_to(const ElementSet& a) const;
    SignVector appended(Sign s) const; // extend by one trailing element

    std::string str() const;

    bool operator==(const SignVector& o) const {
        return m_ == o.m_ && plus_ == o.plus_ && minus_ == o.minus_;
    }

  private:
    void check_index(int e) const;
    void check_same_length(const SignVector& y) const;
    void check_subset(const ElementSet& a) const;

    int m_ = 0;
    ElementSet plus_;
    ElementSet minus_;
};

// Canonical total order used for every sorted output: compare entry by entry
// from element 1 with '-' < '0' < '+'.
bool canonical_less(const SignVector& a, const SignVector& b);

struct CanonicalLess {
    bool operator()(const SignVector& a, const SignVector& b) const {
        return canonical_less(a, b);
    }
};

// Sorts canonically and removes duplicates.
void canonicalize(std::vector<SignVector>& vectors);
bool contains_vector(const std::vector<SignVector>& sorted, const SignVector& x);

} // namespace omc
