#include "gca/laurent.hpp"

#include "gca/segment.hpp"

#include <algorithm>
#include <cassert>

namespace gca {

namespace {

void require_same_arity(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.arity() != b.arity())
        throw ArityMismatch("arity mismatch: " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
}

using TermPointer = const LaurentPolynomial::TermMap::value_type*;

std::vector<TermPointer> descending(const LaurentPolynomial& p) {
    std::vector<TermPointer> out;
    out.reserve(p.size());
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.push_back(&*it);
    return out;
}

int compare(const std::int64_t* a, const std::int64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(std::size_t arity, const Rational& c) {
    LaurentPolynomial p(arity);
    p.add_term(ExponentVector(arity, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const ExponentVector& e, const Rational& c) {
    LaurentPolynomial p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t arity, std::size_t index, std::int64_t power) {
    if (index >= arity)
        throw std::out_of_range("variable index out of range");
    ExponentVector e(arity, 0);
    e[index] = power;
    return monomial(e);
}

bool LaurentPolynomial::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() != 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
}

bool LaurentPolynomial::is_one() const {
    return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
}

bool LaurentPolynomial::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (auto v : e)
            if (v < 0)
                return false;
    return true;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (e.size() != arity_)
        throw ArityMismatch("exponent vector length does not match arity");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

const ExponentVector& LaurentPolynomial::leading_exponent() const {
    if (terms_.empty())
        throw std::logic_error("leading exponent of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& LaurentPolynomial::leading_coefficient() const {
    if (terms_.empty())
        throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

Rational LaurentPolynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPolynomial::constant_term() const {
    return coefficient(ExponentVector(arity_, 0));
}

bool LaurentPolynomial::involves(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0)
            return true;
    return false;
}

std::int64_t LaurentPolynomial::max_degree(std::size_t var) const {
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        d = first ? e[var] : std::max(d, e[var]);
        first = false;
    }
    return d;
}

std::int64_t LaurentPolynomial::min_degree(std::size_t var) const {
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        d = first ? e[var] : std::min(d, e[var]);
        first = false;
    }
    return d;
}

ExponentVector LaurentPolynomial::min_exponents() const {
    ExponentVector m(arity_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < arity_; ++i)
            m[i] = first ? e[i] : std::min(m[i], e[i]);
        first = false;
    }
    return m;
}

std::int64_t LaurentPolynomial::total_degree() const {
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t s = 0;
        for (auto v : e)
            s += v;
        d = first ? s : std::max(d, s);
        first = false;
    }
    return d;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    require_same_arity(*this, other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    require_same_arity(*this, other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
    *this = *this * other;
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

namespace {

LaurentPolynomial heap_multiply(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    const std::size_t n = a.arity();
    // Johnson's heap multiplication: one cursor into the longer factor per
    // term of the shorter one, products emerge in descending order.
    const auto S = descending(a.size() <= b.size() ? a : b);
    const auto L = descending(a.size() <= b.size() ? b : a);
    std::vector<std::int64_t> buf(S.size() * n);
    std::vector<std::size_t> pos(S.size(), 0);
    auto fill = [&](std::size_t i) {
        const auto& x = S[i]->first;
        const auto& y = L[pos[i]]->first;
        for (std::size_t v = 0; v < n; ++v)
            buf[i * n + v] = x[v] + y[v];
    };
    auto less = [&](std::size_t x, std::size_t y) { return compare(&buf[x * n], &buf[y * n], n) < 0; };
    std::vector<std::size_t> heap(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
        fill(i);
        heap[i] = i;
    }
    std::make_heap(heap.begin(), heap.end(), less);
    std::vector<std::pair<ExponentVector, Rational>> out;
    ExponentVector cur(n);
    Rational acc, prod;
    while (!heap.empty()) {
        std::copy_n(&buf[heap.front() * n], n, cur.begin());
        acc = 0;
        while (!heap.empty() && compare(&buf[heap.front() * n], cur.data(), n) == 0) {
            std::pop_heap(heap.begin(), heap.end(), less);
            const std::size_t i = heap.back();
            heap.pop_back();
            mpq_mul(prod.get_mpq_t(), S[i]->second.get_mpq_t(), L[pos[i]]->second.get_mpq_t());
            acc += prod;
            if (++pos[i] < L.size()) {
                fill(i);
                heap.push_back(i);
                std::push_heap(heap.begin(), heap.end(), less);
            }
        }
        if (acc != 0)
            out.emplace_back(cur, acc);
    }
    return LaurentPolynomial::from_descending_terms(n, std::move(out));
}

// Exponents packed into one integer key (first variable most significant, so
// numeric order is lex order), integer numerators accumulated in an
// open-addressing table. Returns nullopt when the exponent box does not fit.
std::optional<LaurentPolynomial> packed_multiply(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    const std::size_t n = a.arity();
    const ExponentVector la = a.min_exponents(), lb = b.min_exponents();
    std::vector<std::uint64_t> stride(n, 1);
    {
        unsigned __int128 total = 1;
        for (std::size_t v = n; v-- > 0;) {
            const std::int64_t span = (a.max_degree(v) - la[v]) + (b.max_degree(v) - lb[v]) + 1;
            stride[v] = static_cast<std::uint64_t>(total);
            total *= static_cast<unsigned __int128>(span);
            if (total >= (static_cast<unsigned __int128>(1) << 62))
                return std::nullopt;
        }
    }
    auto scaled = [&](const LaurentPolynomial& p, const ExponentVector& low, Integer& den) {
        den = 1;
        for (const auto& [e, c] : p.terms())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        std::vector<std::pair<std::uint64_t, Integer>> out;
        out.reserve(p.size());
        for (const auto& [e, c] : p.terms()) {
            std::uint64_t key = 0;
            for (std::size_t v = 0; v < n; ++v)
                key += static_cast<std::uint64_t>(e[v] - low[v]) * stride[v];
            out.emplace_back(key, Integer(c.get_num() * (den / c.get_den())));
        }
        return out;
    };
    Integer da, db;
    const auto A = scaled(a, la, da);
    const auto B = scaled(b, lb, db);

    constexpr std::uint64_t empty = ~std::uint64_t{0};
    std::size_t capacity = 1024;
    while (capacity < 2 * std::min<std::size_t>(A.size() * B.size(), std::size_t{1} << 20))
        capacity <<= 1;
    std::vector<std::uint64_t> keys(capacity, empty);
    std::vector<Integer> values(capacity);
    std::size_t used = 0;
    auto slot = [&](std::uint64_t key) {
        std::size_t h = static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> 17) & (capacity - 1);
        while (keys[h] != empty && keys[h] != key)
            h = (h + 1) & (capacity - 1);
        return h;
    };
    auto grow = [&]() {
        std::vector<std::uint64_t> old_keys(capacity * 2, empty);
        std::vector<Integer> old_values(capacity * 2);
        old_keys.swap(keys);
        old_values.swap(values);
        capacity *= 2;
        for (std::size_t i = 0; i < old_keys.size(); ++i)
            if (old_keys[i] != empty) {
                const std::size_t h = slot(old_keys[i]);
                keys[h] = old_keys[i];
                mpz_swap(values[h].get_mpz_t(), old_values[i].get_mpz_t());
            }
    };
    for (const auto& [ka, ca] : A)
        for (const auto& [kb, cb] : B) {
            const std::uint64_t key = ka + kb;
            std::size_t h = slot(key);
            if (keys[h] == empty) {
                if (2 * (used + 1) > capacity) {
                    grow();
                    h = slot(key);
                }
                keys[h] = key;
                ++used;
            }
            mpz_addmul(values[h].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }

    std::vector<std::size_t> order;
    order.reserve(used);
    for (std::size_t i = 0; i < capacity; ++i)
        if (keys[i] != empty && values[i] != 0)
            order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] > keys[y]; });
    const Integer den = da * db;
    std::vector<std::pair<ExponentVector, Rational>> out;
    out.reserve(order.size());
    for (auto i : order) {
        ExponentVector e(n);
        std::uint64_t key = keys[i];
        for (std::size_t v = 0; v < n; ++v) {
            e[v] = static_cast<std::int64_t>(key / stride[v]) + la[v] + lb[v];
            key %= stride[v];
        }
        Rational c(values[i], den);
        c.canonicalize();
        out.emplace_back(std::move(e), std::move(c));
    }
    return LaurentPolynomial::from_descending_terms(n, std::move(out));
}

}  // namespace

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_arity(a, b);
    if (a.is_zero() || b.is_zero())
        return LaurentPolynomial(a.arity());
    if (a.size() * b.size() >= 64)
        if (auto r = packed_multiply(a, b))
            return std::move(*r);
    return heap_multiply(a, b);
}

LaurentPolynomial LaurentPolynomial::from_descending_terms(std::size_t arity,
                                                           std::vector<std::pair<ExponentVector, Rational>> terms) {
    LaurentPolynomial p(arity);
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (it->first.size() != arity)
            throw ArityMismatch("exponent vector length does not match arity");
        p.terms_.emplace_hint(p.terms_.end(), std::move(it->first), std::move(it->second));
    }
    return p;
}

bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.arity_ != b.arity_)
        return a.arity_ < b.arity_;
    return a.terms_ < b.terms_;
}

LaurentPolynomial LaurentPolynomial::pow(std::int64_t k) const {
    if (k < 0) {
        if (!is_monomial())
            throw std::domain_error("negative power of a non-monomial");
        const auto& [e, c] = *terms_.begin();
        ExponentVector ne(arity_);
        for (std::size_t i = 0; i < arity_; ++i)
            ne[i] = e[i] * k;
        Rational nc = 1;
        for (std::int64_t i = 0; i < -k; ++i)
            nc /= c;
        return monomial(ne, nc);
    }
    LaurentPolynomial result = constant(arity_, 1);
    LaurentPolynomial base = *this;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& shift) const {
    if (shift.size() != arity_)
        throw ArityMismatch("shift length does not match arity");
    LaurentPolynomial r(arity_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), add_exponents(e, shift), c);
    return r;
}

LaurentPolynomial LaurentPolynomial::substitute(std::size_t var, const LaurentPolynomial& value) const {
    require_same_arity(*this, value);
    if (var >= arity_)
        throw std::out_of_range("substitution variable out of range");
    std::map<std::int64_t, LaurentPolynomial> powers;
    LaurentPolynomial r(arity_);
    for (const auto& [e, c] : terms_) {
        auto k = e[var];
        auto it = powers.find(k);
        if (it == powers.end())
            it = powers.emplace(k, value.pow(k)).first;
        ExponentVector rest = e;
        rest[var] = 0;
        r += it->second.shifted(rest) * c;
    }
    return r;
}

std::optional<LaurentPolynomial> LaurentPolynomial::evaluate_at_zero(std::size_t var) const {
    LaurentPolynomial r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] < 0)
            return std::nullopt;
        if (e[var] == 0)
            r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::extended(std::size_t new_arity) const {
    if (new_arity < arity_)
        throw ArityMismatch("cannot extend to a smaller arity");
    LaurentPolynomial r(new_arity);
    for (const auto& [e, c] : terms_) {
        ExponentVector ne = e;
        ne.resize(new_arity, 0);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::truncated(std::size_t new_arity) const {
    if (new_arity > arity_)
        throw ArityMismatch("cannot truncate to a larger arity");
    LaurentPolynomial r(new_arity);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = new_arity; i < arity_; ++i)
            if (e[i] != 0)
                throw std::invalid_argument("truncation drops a variable that occurs");
        r.terms_.emplace(ExponentVector(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(new_arity)), c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != arity_)
        throw ArityMismatch("permutation length does not match arity");
    LaurentPolynomial r(arity_);
    for (const auto& [e, c] : terms_) {
        ExponentVector ne(arity_);
        for (std::size_t i = 0; i < arity_; ++i)
            ne[perm[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

std::pair<ExponentVector, LaurentPolynomial> LaurentPolynomial::split_monomial() const {
    ExponentVector m = min_exponents();
    ExponentVector neg(arity_);
    for (std::size_t i = 0; i < arity_; ++i)
        neg[i] = -m[i];
    return {m, shifted(neg)};
}

Rational LaurentPolynomial::content() const {
    if (terms_.empty())
        return 1;
    Integer num = 0;
    Integer den = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(num, den);
    r.canonicalize();
    if (leading_coefficient() < 0)
        r = -r;
    return r;
}

LaurentPolynomial LaurentPolynomial::primitive() const {
    if (terms_.empty())
        return *this;
    LaurentPolynomial r = *this;
    Rational inv = 1 / content();
    r *= inv;
    return r;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
    return split_monomial().second.primitive();
}

LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + b; }
LaurentPolynomial sub(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a - b; }
LaurentPolynomial mul(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a * b; }

namespace {

bool divides_exponent(const ExponentVector& d, const ExponentVector& e) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i])
            return false;
    return true;
}

// Exact division of polynomials (non-negative exponents) by lex leading
// terms. Heap division: the pending products q_j·b_k are merged with the
// dividend in descending order, so no remainder polynomial is materialized.
std::optional<LaurentPolynomial> polynomial_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    const std::size_t n = a.arity();
    for (std::size_t v = 0; v < n; ++v)
        if (a.max_degree(v) < b.max_degree(v) && !a.is_zero())
            return std::nullopt;
    const auto A = descending(a);
    const auto D = descending(b);
    const ExponentVector& lb = D[0]->first;
    const Rational& lcb = D[0]->second;
    std::vector<std::pair<ExponentVector, Rational>> Q;
    std::vector<std::int64_t> buf;
    std::vector<std::size_t> pos;
    auto fill = [&](std::size_t j) {
        const auto& x = Q[j].first;
        const auto& y = D[pos[j]]->first;
        for (std::size_t v = 0; v < n; ++v)
            buf[j * n + v] = x[v] + y[v];
    };
    auto less = [&](std::size_t x, std::size_t y) { return compare(&buf[x * n], &buf[y * n], n) < 0; };
    std::vector<std::size_t> heap;
    std::size_t ai = 0;
    ExponentVector cur(n);
    Rational acc, prod;
    for (;;) {
        const bool have_a = ai < A.size();
        if (!have_a && heap.empty())
            break;
        if (have_a && (heap.empty() || compare(A[ai]->first.data(), &buf[heap.front() * n], n) >= 0))
            cur = A[ai]->first;
        else
            std::copy_n(&buf[heap.front() * n], n, cur.begin());
        acc = 0;
        if (have_a && A[ai]->first == cur) {
            acc = A[ai]->second;
            ++ai;
        }
        while (!heap.empty() && compare(&buf[heap.front() * n], cur.data(), n) == 0) {
            std::pop_heap(heap.begin(), heap.end(), less);
            const std::size_t j = heap.back();
            heap.pop_back();
            mpq_mul(prod.get_mpq_t(), Q[j].second.get_mpq_t(), D[pos[j]]->second.get_mpq_t());
            acc -= prod;
            if (++pos[j] < D.size()) {
                fill(j);
                heap.push_back(j);
                std::push_heap(heap.begin(), heap.end(), less);
            }
        }
        if (acc == 0)
            continue;
        if (!divides_exponent(lb, cur))
            return std::nullopt;
        ExponentVector diff(n);
        for (std::size_t v = 0; v < n; ++v)
            diff[v] = cur[v] - lb[v];
        Q.emplace_back(std::move(diff), acc / lcb);
        pos.push_back(1);
        buf.resize(Q.size() * n);
        if (D.size() > 1) {
            fill(Q.size() - 1);
            heap.push_back(Q.size() - 1);
            std::push_heap(heap.begin(), heap.end(), less);
        }
    }
    return LaurentPolynomial::from_descending_terms(n, std::move(Q));
}

}  // namespace

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_arity(a, b);
    if (b.is_zero())
        throw DivisionByZero("division by the zero polynomial");
    if (a.is_zero())
        return LaurentPolynomial(a.arity());
    auto [ma, pa] = a.split_monomial();
    auto [mb, pb] = b.split_monomial();
    std::optional<LaurentPolynomial> q;
    if (pb.is_constant()) {
        q = pa * (1 / pb.leading_coefficient());
    } else {
        q = polynomial_divide(pa, pb);
        if (!q)
            return std::nullopt;
    }
    ExponentVector shift(a.arity());
    for (std::size_t i = 0; i < shift.size(); ++i)
        shift[i] = ma[i] - mb[i];
    return q->shifted(shift);
}

namespace {

LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

using Coeffs = std::vector<LaurentPolynomial>;

Coeffs coefficients_in(const LaurentPolynomial& p, std::size_t v) {
    Coeffs out(static_cast<std::size_t>(p.max_degree(v)) + 1, LaurentPolynomial(p.arity()));
    for (const auto& [e, c] : p.terms()) {
        ExponentVector rest = e;
        rest[v] = 0;
        out[static_cast<std::size_t>(e[v])].add_term(rest, c);
    }
    return out;
}

LaurentPolynomial from_coefficients(const Coeffs& cs, std::size_t v, std::size_t arity) {
    LaurentPolynomial r(arity);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        ExponentVector shift(arity, 0);
        shift[v] = static_cast<std::int64_t>(k);
        r += cs[k].shifted(shift);
    }
    return r;
}

void trim(Coeffs& cs) {
    while (!cs.empty() && cs.back().is_zero())
        cs.pop_back();
}

LaurentPolynomial exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    auto q = divide_exact(a, b);
    assert(q && "expected exact division");
    if (!q)
        throw std::logic_error("internal error: inexact division in gcd");
    return *q;
}

LaurentPolynomial content_in(const LaurentPolynomial& p, std::size_t v) {
    Coeffs cs = coefficients_in(p, v);
    LaurentPolynomial g(p.arity());
    for (const auto& c : cs) {
        if (c.is_zero())
            continue;
        g = g.is_zero() ? c.primitive() : poly_gcd(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

// Pseudo-remainder of a by b as polynomials in the variable whose coefficients are given.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
    const std::size_t db = b.size() - 1;
    const LaurentPolynomial& lb = b.back();
    long steps = static_cast<long>(a.size()) - static_cast<long>(db);
    while (!a.empty() && a.size() - 1 >= db) {
        LaurentPolynomial la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a)
            c = c * lb;
        for (std::size_t k = 0; k <= db; ++k)
            a[k + shift] -= la * b[k];
        trim(a);
        --steps;
    }
    if (steps > 0) {
        LaurentPolynomial f = lb.pow(steps);
        for (auto& c : a)
            c = c * f;
    }
    return a;
}

// Subresultant remainder sequence; a and b are primitive in v and not constant in v.
LaurentPolynomial subresultant_gcd(const LaurentPolynomial& pa, const LaurentPolynomial& pb, std::size_t v) {
    Coeffs a = coefficients_in(pa, v);
    Coeffs b = coefficients_in(pb, v);
    if (a.size() < b.size())
        std::swap(a, b);
    const std::size_t arity = pa.arity();
    LaurentPolynomial g = LaurentPolynomial::constant(arity, 1);
    LaurentPolynomial h = LaurentPolynomial::constant(arity, 1);
    for (;;) {
        const long delta = static_cast<long>(a.size()) - static_cast<long>(b.size());
        Coeffs r = pseudo_remainder(a, b);
        if (r.empty())
            break;
        if (r.size() == 1)
            return LaurentPolynomial::constant(arity, 1);
        a = std::move(b);
        LaurentPolynomial divisor = g * h.pow(delta);
        for (auto& c : r)
            c = exact(c, divisor);
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else {
            h = exact(g.pow(delta), h.pow(delta - 1));
        }
    }
    LaurentPolynomial last = from_coefficients(b, v, arity);
    return exact(last, content_in(last, v)).primitive();
}

// gcd of polynomials without monomial factors.
LaurentPolynomial gcd_no_monomial(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    const std::size_t arity = a.arity();
    if (a.is_constant() || b.is_constant())
        return LaurentPolynomial::constant(arity, 1);
    std::size_t v = arity;
    for (std::size_t i = arity; i-- > 0;) {
        if (a.involves(i) || b.involves(i)) {
            v = i;
            break;
        }
    }
    const bool in_a = a.involves(v);
    const bool in_b = b.involves(v);
    if (!in_a)
        return poly_gcd(a, content_in(b, v));
    if (!in_b)
        return poly_gcd(content_in(a, v), b);
    LaurentPolynomial ca = content_in(a, v);
    LaurentPolynomial cb = content_in(b, v);
    LaurentPolynomial c = poly_gcd(ca, cb);
    LaurentPolynomial g = subresultant_gcd(exact(a, ca), exact(b, cb), v);
    return (c * g).primitive();
}

// gcd of polynomials, including the monomial part; result primitive.
LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero())
        return b.primitive();
    if (b.is_zero())
        return a.primitive();
    auto [ma, ra] = a.split_monomial();
    auto [mb, rb] = b.split_monomial();
    ExponentVector m(a.arity());
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = std::min(ma[i], mb[i]);
    return gcd_no_monomial(ra.primitive(), rb.primitive()).shifted(m);
}

std::optional<LaurentPolynomial> segment_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    auto sa = segment_decompose(a);
    if (!sa)
        return std::nullopt;
    auto sb = segment_decompose(b);
    if (!sb)
        return std::nullopt;
    const std::size_t arity = a.arity();
    if (sa->profile.degree() <= 0 || sb->profile.degree() <= 0)
        return LaurentPolynomial::constant(arity, 1);
    if (sa->direction != sb->direction)
        return LaurentPolynomial::constant(arity, 1);
    UnivariatePolynomial g = gcd(sa->inflated_profile(), sb->inflated_profile());
    return sa->lift(g).normalized();
}

}  // namespace

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_arity(a, b);
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    if (a.is_zero())
        return b.normalized();
    if (b.is_zero())
        return a.normalized();
    LaurentPolynomial na = a.normalized();
    LaurentPolynomial nb = b.normalized();
    if (auto g = segment_gcd(na, nb))
        return *g;
    return poly_gcd(na, nb).normalized();
}

bool associated(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    return a.normalized() == b.normalized();
}

}  // namespace gca
