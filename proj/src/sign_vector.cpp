#include "omc/sign_vector.hpp"

#include <algorithm>
#include <bit>

namespace omc {

char sign_char(Sign s) {
    switch (s) {
    case Sign::minus: return '-';
    case Sign::zero: return '0';
    case Sign::plus: return '+';
    }
    fail(ErrorKind::internal, "corrupt sign value");
}

Sign sign_from_char(char c) {
    switch (c) {
    case '-': return Sign::minus;
    case '0': return Sign::zero;
    case '+': return Sign::plus;
    default:
        fail(ErrorKind::domain,
             std::string("invalid sign character '") + c + "' (expected '+', '-' or '0')");
    }
}

void ElementSet::check_element(int e) {
    if (e < 1 || e > kMaxGroundSetSize)
        fail(ErrorKind::domain, "element " + std::to_string(e) + " outside [1," +
                                    std::to_string(kMaxGroundSetSize) + "]");
}

ElementSet ElementSet::full(int m) {
    if (m < 0 || m > kMaxGroundSetSize)
        fail(ErrorKind::resource, "ground set size " + std::to_string(m) + " exceeds capacity " +
                                      std::to_string(kMaxGroundSetSize));
    ElementSet s;
    for (int w = 0; m > 0; ++w, m -= 64)
        s.words_[static_cast<std::size_t>(w)] =
            m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    return s;
}

ElementSet ElementSet::single(int e) {
    ElementSet s;
    s.insert(e);
    return s;
}

ElementSet ElementSet::interval(int lo, int hi) {
    ElementSet s;
    for (int e = std::max(lo, 1); e <= hi; ++e) s.insert(e);
    return s;
}

ElementSet ElementSet::of(std::initializer_list<int> elements) {
    ElementSet s;
    for (int e : elements) s.insert(e);
    return s;
}

ElementSet ElementSet::of(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) s.insert(e);
    return s;
}

bool ElementSet::contains(int e) const {
    if (e < 1 || e > kMaxGroundSetSize) return false;
    return (words_[static_cast<std::size_t>((e - 1) / 64)] >> ((e - 1) % 64)) & 1;
}

void ElementSet::insert(int e) {
    check_element(e);
    words_[static_cast<std::size_t>((e - 1) / 64)] |= std::uint64_t{1} << ((e - 1) % 64);
}

void ElementSet::erase(int e) {
    check_element(e);
    words_[static_cast<std::size_t>((e - 1) / 64)] &= ~(std::uint64_t{1} << ((e - 1) % 64));
}

int ElementSet::count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

std::vector<int> ElementSet::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int w = 0; w < kMaskWords; ++w) {
        std::uint64_t bits = words_[static_cast<std::size_t>(w)];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(64 * w + b + 1);
            bits &= bits - 1;
        }
    }
    return out;
}

bool ElementSet::subset_of(const ElementSet& other) const {
    for (int i = 0; i < kMaskWords; ++i)
        if (words_[static_cast<std::size_t>(i)] & ~other.words_[static_cast<std::size_t>(i)])
            return false;
    return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
    for (int i = 0; i < kMaskWords; ++i)
        if (words_[static_cast<std::size_t>(i)] & other.words_[static_cast<std::size_t>(i)])
            return true;
    return false;
}

ElementSet ElementSet::united(const ElementSet& o) const {
    ElementSet s;
    for (int i = 0; i < kMaskWords; ++i)
        s.words_[static_cast<std::size_t>(i)] =
            words_[static_cast<std::size_t>(i)] | o.words_[static_cast<std::size_t>(i)];
    return s;
}

ElementSet ElementSet::intersected(const ElementSet& o) const {
    ElementSet s;
    for (int i = 0; i < kMaskWords; ++i)
        s.words_[static_cast<std::size_t>(i)] =
            words_[static_cast<std::size_t>(i)] & o.words_[static_cast<std::size_t>(i)];
    return s;
}

ElementSet ElementSet::minus(const ElementSet& o) const {
    ElementSet s;
    for (int i = 0; i < kMaskWords; ++i)
        s.words_[static_cast<std::size_t>(i)] =
            words_[static_cast<std::size_t>(i)] & ~o.words_[static_cast<std::size_t>(i)];
    return s;
}

ElementSet ElementSet::sym_diff(const ElementSet& o) const {
    ElementSet s;
    for (int i = 0; i < kMaskWords; ++i)
        s.words_[static_cast<std::size_t>(i)] =
            words_[static_cast<std::size_t>(i)] ^ o.words_[static_cast<std::size_t>(i)];
    return s;
}

SignVector::SignVector(int m) : m_(m) {
    if (m < 0 || m > kMaxGroundSetSize)
        fail(ErrorKind::resource, "sign vector length " + std::to_string(m) +
                                      " exceeds capacity " + std::to_string(kMaxGroundSetSize));
}

SignVector SignVector::parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxGroundSetSize))
        fail(ErrorKind::resource, "sign vector literal longer than capacity " +
                                      std::to_string(kMaxGroundSetSize));
    SignVector v(static_cast<int>(text.size()));
    for (int e = 1; e <= v.m_; ++e) v.set(e, sign_from_char(text[static_cast<std::size_t>(e - 1)]));
    return v;
}

SignVector SignVector::all_plus(int m) {
    SignVector v(m);
    v.plus_ = ElementSet::full(m);
    return v;
}

SignVector SignVector::all_minus(int m) {
    SignVector v(m);
    v.minus_ = ElementSet::full(m);
    return v;
}

SignVector SignVector::from_signs(const std::vector<Sign>& signs) {
    SignVector v(static_cast<int>(signs.size()));
    for (int e = 1; e <= v.m_; ++e) v.set(e, signs[static_cast<std::size_t>(e - 1)]);
    return v;
}

void SignVector::check_index(int e) const {
    if (e < 1 || e > m_)
        fail(ErrorKind::domain,
             "element " + std::to_string(e) + " outside [1," + std::to_string(m_) + "]");
}

void SignVector::check_same_length(const SignVector& y) const {
    if (m_ != y.m_)
        fail(ErrorKind::domain, "sign vector length mismatch: " + std::to_string(m_) + " vs " +
                                    std::to_string(y.m_));
}

void SignVector::check_subset(const ElementSet& a) const {
    if (!a.subset_of(ElementSet::full(m_)))
        fail(ErrorKind::domain, "element set not contained in [1," + std::to_string(m_) + "]");
}

Sign SignVector::at(int e) const {
    check_index(e);
    if (plus_.contains(e)) return Sign::plus;
    if (minus_.contains(e)) return Sign::minus;
    return Sign::zero;
}

void SignVector::set(int e, Sign s) {
    check_index(e);
    plus_.erase(e);
    minus_.erase(e);
    if (s == Sign::plus) plus_.insert(e);
    else if (s == Sign::minus) minus_.insert(e);
}

ElementSet SignVector::zero_set() const {
    return ElementSet::full(m_).minus(support());
}

SignVector SignVector::negated() const {
    SignVector v(m_);
    v.plus_ = minus_;
    v.minus_ = plus_;
    return v;
}

SignVector SignVector::reoriented(const ElementSet& a) const {
    check_subset(a);
    SignVector v(m_);
    v.plus_ = plus_.minus(a).united(minus_.intersected(a));
    v.minus_ = minus_.minus(a).united(plus_.intersected(a));
    return v;
}

SignVector SignVector::composed_with(const SignVector& y) const {
    check_same_length(y);
    ElementSet supp = support();
    SignVector v(m_);
    v.plus_ = plus_.united(y.plus_.minus(supp));
    v.minus_ = minus_.united(y.minus_.minus(supp));
    return v;
}

ElementSet SignVector::separation_set(const SignVector& y) const {
    check_same_length(y);
    return plus_.intersected(y.minus_).united(minus_.intersected(y.plus_));
}

bool SignVector::conforms_to(const SignVector& y) const {
    check_same_length(y);
    return !plus_.intersects(y.minus_) && !minus_.intersects(y.plus_);
}

bool SignVector::leq(const SignVector& y) const {
    check_same_length(y);
    return plus_.subset_of(y.plus_) && minus_.subset_of(y.minus_);
}

SignVector SignVector::restricted_to(const ElementSet& a) const {
    check_subset(a);
    std::vector<int> keep = a.elements();
    SignVector v(static_cast<int>(keep.size()));
    int idx = 0;
    for (int e : keep) {
        ++idx;
        if (plus_.contains(e)) v.plus_.insert(idx);
        else if (minus_.contains(e)) v.minus_.insert(idx);
    }
    return v;
}

SignVector SignVector::appended(Sign s) const {
    SignVector v(m_ + 1);
    v.plus_ = plus_;
    v.minus_ = minus_;
    if (s == Sign::plus) v.plus_.insert(m_ + 1);
    else if (s == Sign::minus) v.minus_.insert(m_ + 1);
    return v;
}

std::string SignVector::str() const {
    std::string s(static_cast<std::size_t>(m_), '0');
    for (int e : plus_.elements()) s[static_cast<std::size_t>(e - 1)] = '+';
    for (int e : minus_.elements()) s[static_cast<std::size_t>(e - 1)] = '-';
    return s;
}

bool canonical_less(const SignVector& a, const SignVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    auto rank = [](Sign s) { return s == Sign::minus ? 0 : (s == Sign::zero ? 1 : 2); };
    for (int e = 1; e <= a.size(); ++e) {
        int ra = rank(a.at(e));
        int rb = rank(b.at(e));
        if (ra != rb) return ra < rb;
    }
    return false;
}

void canonicalize(std::vector<SignVector>& vectors) {
    std::sort(vectors.begin(), vectors.end(), CanonicalLess{});
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
}

bool contains_vector(const std::vector<SignVector>& sorted, const SignVector& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x, CanonicalLess{});
}

} // namespace omc
