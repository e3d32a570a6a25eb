#include "mbounds/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <utility>

#include "mbounds/classic_bounds.hpp"
#include "mbounds/errors.hpp"
#include "mbounds/integer_refinements.hpp"
#include "mbounds/refined_bounds.hpp"
#include "mbounds/sample.hpp"

namespace mbounds::oracle {
namespace {

// ------------------------------------------------------------------
// deterministic generator state (identical streams on every platform)
// ------------------------------------------------------------------
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    long long below(long long m) { // m > 0
        return static_cast<long long>(next() % static_cast<std::uint64_t>(m));
    }
    long long in_range(long long lo, long long hi) { return lo + below(hi - lo + 1); }
    bool flip() { return (next() & 1) != 0; }
};

// ------------------------------------------------------------------
// exact rational plumbing
// ------------------------------------------------------------------
BigRat rat_from_double(double x) {
    if (x == 0.0) return BigRat(0);
    if (!std::isfinite(x)) throw InvalidValue("cannot convert a non-finite value");
    int exp = 0;
    double m = std::frexp(x, &exp);      // x = m * 2^exp, |m| in [0.5, 1)
    long long mant = std::llround(std::ldexp(m, 53)); // exact: 53-bit mantissa
    int e = exp - 53;
    BigRat r(mant);
    if (e >= 0)
        r *= BigRat(BigInt(1) << e);
    else
        r /= BigRat(BigInt(1) << -e);
    return r;
}

BigRat rpow(const BigRat& base, int e) {
    BigRat out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

int sgn(const BigRat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

/// Exact integer sample with rational moments, descending order.
struct ExactSample {
    std::vector<long long> v;
    std::vector<long long> prefix; // prefix[i] = v[0] + ... + v[i-1]
    long long sum = 0;
    BigRat mean;
    bool distinct = false;
    bool int_mean = false;
    mutable std::map<int, BigRat> central_memo;

    explicit ExactSample(std::span<const long long> vals) {
        if (vals.empty()) throw EmptySample("empty sample");
        v.assign(vals.begin(), vals.end());
        std::sort(v.begin(), v.end(), std::greater<>());
        prefix.resize(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) prefix[i + 1] = prefix[i] + v[i];
        sum = prefix.back();
        mean = BigRat(sum, static_cast<long long>(v.size()));
        distinct = std::adjacent_find(v.begin(), v.end()) == v.end();
        int_mean = sum % static_cast<long long>(v.size()) == 0;
    }

    int n() const { return static_cast<int>(v.size()); }
    long long maxv() const { return v.front(); }
    long long minv() const { return v.back(); }
    long long range() const { return v.front() - v.back(); }

    BigRat central(int r) const {
        auto it = central_memo.find(r);
        if (it != central_memo.end()) return it->second;
        BigRat acc(0);
        for (long long x : v) acc += rpow(BigRat(x) - mean, r);
        BigRat out = acc / n();
        central_memo.emplace(r, out);
        return out;
    }

    BigRat raw(int r) const {
        BigInt acc(0);
        for (long long x : v) {
            BigInt p(1);
            for (int i = 0; i < r; ++i) p *= x;
            acc += p;
        }
        return BigRat(acc, BigInt(n()));
    }

    BigRat seg_mean(int k, int j) const { // 1-based, k <= j
        return BigRat(prefix[static_cast<size_t>(j)] - prefix[static_cast<size_t>(k - 1)],
                      static_cast<long long>(j - k + 1));
    }
};

// ------------------------------------------------------------------
// rational polynomials and Sturm isolation
// ------------------------------------------------------------------
struct RatPoly {
    std::vector<BigRat> c; // highest degree first; empty means zero
    bool zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

void strip_leading(RatPoly& p) {
    size_t i = 0;
    while (i < p.c.size() && p.c[i] == 0) ++i;
    p.c.erase(p.c.begin(), p.c.begin() + static_cast<std::ptrdiff_t>(i));
}

void normalize_sign_free(RatPoly& p) { // divide by |leading|, a positive scalar
    if (p.zero()) return;
    BigRat lead = p.c.front();
    if (lead < 0) lead = -lead;
    for (auto& x : p.c) x /= lead;
}

BigRat eval(const RatPoly& p, const BigRat& x) {
    BigRat acc(0);
    for (const auto& ci : p.c) acc = acc * x + ci;
    return acc;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    int deg = p.degree();
    for (int i = 0; i < deg; ++i) d.c.push_back(p.c[static_cast<size_t>(i)] * (deg - i));
    return d;
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
    while (!a.zero() && a.degree() >= b.degree()) {
        BigRat f = a.c.front() / b.c.front();
        for (size_t i = 0; i < b.c.size(); ++i) a.c[i] -= f * b.c[i];
        a.c.front() = 0;
        strip_leading(a);
    }
    return a;
}

/// Exact synthetic division by (x - root); requires remainder zero.
RatPoly deflate(const RatPoly& p, const BigRat& root) {
    RatPoly q;
    BigRat acc(0);
    for (size_t i = 0; i + 1 < p.c.size(); ++i) {
        acc = acc * root + p.c[i];
        q.c.push_back(acc);
    }
    return q;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> ch;
    ch.push_back(p);
    RatPoly d = derivative(p);
    strip_leading(d);
    if (d.zero()) return ch;
    normalize_sign_free(d);
    ch.push_back(std::move(d));
    while (ch.back().degree() >= 1) {
        RatPoly r = remainder(ch[ch.size() - 2], ch.back());
        if (r.zero()) break;
        for (auto& x : r.c) x = -x;
        normalize_sign_free(r);
        ch.push_back(std::move(r));
    }
    return ch;
}

long long variations(const std::vector<RatPoly>& chain, const BigRat& x) {
    long long var = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

std::vector<RootBracket> isolate_impl(RatPoly p, const BigRat& lo, const BigRat& hi) {
    std::vector<RootBracket> out;
    if (p.degree() < 1) return out;

    // Divide out roots sitting exactly on an endpoint so the variation
    // counts below see clean (non-root) endpoints.
    for (const BigRat* end : {&lo, &hi}) {
        while (p.degree() >= 1 && eval(p, *end) == 0) {
            double e = to_double(*end);
            out.push_back(RootBracket{e, e, e});
            p = deflate(p, *end);
        }
    }
    if (p.degree() < 1 || !(lo < hi)) {
        std::sort(out.begin(), out.end(),
                  [](const RootBracket& a, const RootBracket& b) { return a.value < b.value; });
        out.erase(std::unique(out.begin(), out.end(),
                              [](const RootBracket& a, const RootBracket& b) {
                                  return a.value == b.value;
                              }),
                  out.end());
        return out;
    }

    const BigRat tol = rat_from_double(1e-10);
    const BigRat cluster_tol = rat_from_double(1e-13);
    std::vector<RatPoly> chain = sturm_chain(p);

    struct Node {
        BigRat a, b;
        long long va, vb;
    };
    std::vector<Node> stack;
    {
        long long va = variations(chain, lo), vb = variations(chain, hi);
        if (va - vb > 0) stack.push_back(Node{lo, hi, va, vb});
    }
    while (!stack.empty()) {
        Node nd = std::move(stack.back());
        stack.pop_back();
        long long k = nd.va - nd.vb;
        if (k <= 0) continue;
        BigRat width = nd.b - nd.a;
        if (k == 1) {
            // Fast path: once the interval holds a single distinct root and
            // the polynomial flips sign, plain bisection on p suffices.
            int sa = sgn(eval(p, nd.a));
            int sb = sgn(eval(p, nd.b));
            if (sa != 0 && sb != 0 && sa != sb) {
                BigRat a = nd.a, b = nd.b;
                while (b - a > tol) {
                    BigRat m = (a + b) / 2;
                    int sm = sgn(eval(p, m));
                    if (sm == 0) { a = m; b = m; break; }
                    if (sm == sa) a = m; else b = m;
                }
                out.push_back(RootBracket{to_double((a + b) / 2), to_double(a), to_double(b)});
                continue;
            }
            if (width <= tol) {
                out.push_back(
                    RootBracket{to_double((nd.a + nd.b) / 2), to_double(nd.a), to_double(nd.b)});
                continue;
            }
        } else if (width <= cluster_tol) {
            throw WidenInterval("distinct roots closer than the isolation width");
        }
        BigRat m = (nd.a + nd.b) / 2;
        long long vm = variations(chain, m);
        stack.push_back(Node{m, nd.b, vm, nd.vb});
        stack.push_back(Node{nd.a, m, nd.va, vm});
    }
    std::sort(out.begin(), out.end(),
              [](const RootBracket& a, const RootBracket& b) { return a.value < b.value; });
    return out;
}

RatPoly rat_poly_from(std::span<const double> monic) {
    if (monic.size() < 2) throw InvalidInput("polynomial needs degree >= 1");
    if (monic.size() > 17) throw InvalidInput("root isolation supports degree <= 16");
    if (monic.front() == 0.0) throw InvalidInput("leading coefficient must be nonzero");
    RatPoly p;
    for (double c : monic) {
        if (!std::isfinite(c)) throw InvalidValue("coefficients must be finite");
        p.c.push_back(rat_from_double(c));
    }
    BigRat lead = p.c.front();
    for (auto& x : p.c) x /= lead;
    return p;
}

// ------------------------------------------------------------------
// verification harness
// ------------------------------------------------------------------
constexpr double kRealSlack = 1e-9;

double slack(double a, double b) {
    return kRealSlack * std::max({1.0, std::abs(a), std::abs(b)});
}

struct Ctx {
    VerificationRun* run = nullptr;
    std::vector<double> input;

    bool has(const char* id) const {
        return std::binary_search(run->bounds.begin(), run->bounds.end(), std::string(id));
    }
    void check(bool ok, const char* id, double claimed, double actual) {
        ++run->checks;
        if (!ok) run->failures.push_back(Failure{input, id, claimed, actual});
    }
    void tight(const char* id) { ++run->equalities[id]; }
};

/// dev <= Q^{1/2r} checked as a powered rational comparison; counts equality.
void check_powered_upper(Ctx& c, const char* id, const BigRat& dev, const BigRat& q, int r,
                         double claimed, double actual) {
    if (dev <= 0) {
        c.check(true, id, claimed, actual);
        if (dev == 0 && q == 0) c.tight(id);
        return;
    }
    BigRat lhs = rpow(dev, 2 * r);
    c.check(lhs <= q, id, claimed, actual);
    if (lhs == q) c.tight(id);
}

void check_powered_lower(Ctx& c, const char* id, const BigRat& dev, const BigRat& q, int r,
                         double claimed, double actual) {
    check_powered_upper(c, id, -dev, q, r, claimed, actual);
}

/// lo <= x (exact), counting equality.
void check_rat_lower(Ctx& c, const char* id, const BigRat& lo, const BigRat& x, double claimed,
                     double actual) {
    c.check(lo <= x, id, claimed, actual);
    if (lo == x) c.tight(id);
}

void check_rat_upper(Ctx& c, const char* id, const BigRat& x, const BigRat& up, double claimed,
                     double actual) {
    c.check(x <= up, id, claimed, actual);
    if (x == up) c.tight(id);
}

/// library double vs exact rational, 1e-9 relative.
void check_close(Ctx& c, const char* id, double libv, const BigRat& exact) {
    double e = to_double(exact);
    c.check(std::abs(libv - e) <= slack(libv, e), id, libv, e);
}

void check_contains(Ctx& c, const char* id, const BoundEntry& e, double x) {
    c.check(e.lower - slack(e.lower, x) <= x && x <= e.upper + slack(e.upper, x), id,
            x < e.lower ? e.lower : e.upper, x);
}

/// The library's verdict on a lhs <= rhs check may only be "false" when the
/// comparison is genuinely borderline at double precision (exact equality
/// cases land here); anything else is a defect.
void check_verdict(Ctx& c, const char* id, const BoundEntry& e) {
    bool ok = e.holds.value_or(false) ||
              e.check_lhs <= e.check_rhs + slack(e.check_lhs, e.check_rhs);
    c.check(ok, id, e.check_lhs, e.check_rhs);
}

const std::vector<std::string>& classic_ids() {
    static const std::vector<std::string> ids = {
        "samuelson",       "ws-order",          "ws-segment",        "nagy",
        "sharma-m2r",      "sharma-saini",      "sharma-m3-raw",     "sharma-m3-central",
        "sharma-m3-box",   "sharma-m3-quadratic", "sharma-m3-abs",   "sharma-m4",
        "sharma-m4-combo"};
    return ids;
}

const std::vector<std::string>& thm1_ids() {
    static const std::vector<std::string> ids = {"gen-order", "gen-segment", "m2r-piecewise",
                                                 "abs-deviation"};
    return ids;
}

const std::vector<std::string>& integer_ids() {
    static const std::vector<std::string> ids = {
        "m3-raw-refined",    "m3-central-refined",       "m3-box-refined",
        "m3-quadratic-refined", "spread-from-m3-quadratic", "m3-abs-refined",
        "spread-from-m3-abs",   "m4-upper-refined",         "m4-combo-refined",
        "m4-count-lower",    "m4-range-lower"};
    return ids;
}

std::vector<std::string> resolve_selectors(const std::vector<std::string>& selectors,
                                           Family family) {
    std::vector<std::string> out;
    auto append = [&](const std::vector<std::string>& ids) {
        out.insert(out.end(), ids.begin(), ids.end());
    };
    for (const auto& sel : selectors) {
        if (sel == "classic") {
            append(classic_ids());
        } else if (sel == "thm1") {
            append(thm1_ids());
        } else if (sel == "thm1-upper") {
            out.push_back("gen-order-upper");
        } else if (sel == "all-real") {
            append(classic_ids());
            append(thm1_ids());
        } else if (sel == "all-integer") {
            if (family != Family::distinct_integers)
                throw InvalidInput("selector 'all-integer' needs the distinct-integer family");
            append(classic_ids());
            append(thm1_ids());
            append(integer_ids());
        } else if (sel == "all") {
            append(classic_ids());
            append(thm1_ids());
            if (family == Family::distinct_integers) append(integer_ids());
        } else {
            throw InvalidInput("unknown bound selector: " + sel);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Powered order-statistic radii, exact: Q such that radius = Q^{1/2r}.
BigRat q_upper(int n, int j, int r, const BigRat& m2r) {
    if (j == n) return BigRat(0);
    BigInt nj(n - j), jj(j);
    BigInt njp(1), jp(1);
    for (int i = 0; i < 2 * r - 1; ++i) njp *= nj;
    for (int i = 0; i < 2 * r; ++i) jp *= jj;
    return BigRat(BigInt(n) * njp) * m2r / BigRat(jp + jj * njp);
}

BigRat q_lower(int n, int k, int r, const BigRat& m2r) {
    if (k == 1) return BigRat(0);
    BigInt km(k - 1), nk(n - k + 1);
    BigInt kmp(1), nkp(1);
    for (int i = 0; i < 2 * r - 1; ++i) kmp *= km;
    for (int i = 0; i < 2 * r; ++i) nkp *= nk;
    return BigRat(BigInt(n) * kmp) * m2r / BigRat(nkp + nk * kmp);
}

constexpr std::array<int, 3> kOrders = {1, 2, 3};

void check_integer_sample(Ctx& c, const ExactSample& ex) {
    const int n = ex.n();
    std::vector<double> dv(ex.v.begin(), ex.v.end());
    Sample s(dv);
    const BigRat mean = ex.mean;
    const BigRat m2 = ex.central(2);
    const BigRat m3 = ex.central(3);
    const BigRat m4 = ex.central(4);
    const BigRat M(ex.maxv()), m(ex.minv());
    const BigRat range(ex.range());
    const bool constant_sample = ex.range() == 0;

    if (c.has("samuelson") && n >= 2) {
        BigRat radsq = m2 * (n - 1);
        for (int j = 1; j <= n; ++j) {
            BoundEntry e = samuelson_interval(s, j);
            BigRat dev = BigRat(ex.v[static_cast<size_t>(j - 1)]) - mean;
            check_powered_upper(c, "samuelson", dev, radsq, 1, e.upper,
                                to_double(BigRat(ex.v[static_cast<size_t>(j - 1)])));
            check_powered_lower(c, "samuelson", dev, radsq, 1, e.lower,
                                to_double(BigRat(ex.v[static_cast<size_t>(j - 1)])));
            check_contains(c, "samuelson", e, static_cast<double>(ex.v[static_cast<size_t>(j - 1)]));
        }
    }

    if (c.has("ws-order") && n >= 2) {
        for (int j = 1; j <= n; ++j) {
            BoundEntry e = ws_interval(s, j, j);
            BigRat dev = BigRat(ex.v[static_cast<size_t>(j - 1)]) - mean;
            check_powered_upper(c, "ws-order", dev, q_upper(n, j, 1, m2), 1, e.upper,
                                static_cast<double>(ex.v[static_cast<size_t>(j - 1)]));
            check_powered_lower(c, "ws-order", dev, q_lower(n, j, 1, m2), 1, e.lower,
                                static_cast<double>(ex.v[static_cast<size_t>(j - 1)]));
            check_contains(c, "ws-order", e, static_cast<double>(ex.v[static_cast<size_t>(j - 1)]));
        }
    }

    if (c.has("ws-segment") && n >= 2) {
        for (int k = 1; k <= n; ++k)
            for (int j = k; j <= n; ++j) {
                BoundEntry e = ws_interval(s, k, j);
                BigRat seg = ex.seg_mean(k, j);
                BigRat dev = seg - mean;
                check_powered_upper(c, "ws-segment", dev, q_upper(n, j, 1, m2), 1, e.upper,
                                    to_double(seg));
                check_powered_lower(c, "ws-segment", dev, q_lower(n, k, 1, m2), 1, e.lower,
                                    to_double(seg));
                check_contains(c, "ws-segment", e, to_double(seg));
            }
    }

    if (c.has("nagy") && n >= 2) {
        BoundEntry e = nagy_m2_lower(s);
        BigRat bound = rpow(range, 2) / (2 * n);
        check_rat_lower(c, "nagy", bound, m2, e.lower, to_double(m2));
        check_close(c, "nagy", e.lower, bound);
    }

    if (c.has("sharma-m2r") && n >= 2) {
        for (int r : kOrders) {
            BoundEntry e = sharma_m2r_lower(s, r);
            BigRat bound = rpow(range, 2 * r) / (BigRat(BigInt(1) << (2 * r - 1)) * n);
            check_rat_lower(c, "sharma-m2r", bound, ex.central(2 * r), e.lower,
                            to_double(ex.central(2 * r)));
            check_close(c, "sharma-m2r", e.lower, bound);
        }
    }

    if (c.has("sharma-saini") && n >= 2) {
        for (int r : {1, 2}) {
            BigRat m2r = ex.central(2 * r);
            BigInt nm1p(1);
            for (int i = 0; i < 2 * r - 1; ++i) nm1p *= (n - 1);
            BigRat coeff = BigRat(1 + nm1p) / BigRat(BigInt(n) * nm1p);
            for (int j = 1; j <= n; ++j) {
                BoundEntry e = sharma_saini_m2r_lower(s, r, j);
                BigRat dev = BigRat(ex.v[static_cast<size_t>(j - 1)]) - mean;
                BigRat bound = coeff * rpow(dev, 2 * r);
                check_rat_lower(c, "sharma-saini", bound, m2r, e.lower, to_double(m2r));
                check_close(c, "sharma-saini", e.lower, bound);
            }
        }
    }

    if (c.has("m2r-piecewise") && n >= 2) {
        for (int r : kOrders) {
            BigRat m2r = ex.central(2 * r);
            for (int j = 1; j <= n; ++j) {
                BoundEntry e = m2r_lower_piecewise(s, j, r);
                BigRat dev = BigRat(ex.v[static_cast<size_t>(j - 1)]) - mean;
                BigRat bound(0);
                if (dev > 0 && j < n) {
                    BigInt njp(1), jp(1);
                    for (int i = 0; i < 2 * r - 1; ++i) njp *= (n - j);
                    for (int i = 0; i < 2 * r; ++i) jp *= j;
                    bound = BigRat(jp + BigInt(j) * njp) / BigRat(BigInt(n) * njp) * rpow(dev, 2 * r);
                } else if (dev < 0 && j > 1) {
                    BigInt kmp(1), nkp(1);
                    for (int i = 0; i < 2 * r - 1; ++i) kmp *= (j - 1);
                    for (int i = 0; i < 2 * r; ++i) nkp *= (n - j + 1);
                    bound = BigRat(nkp + BigInt(n - j + 1) * kmp) / BigRat(BigInt(n) * kmp) *
                            rpow(dev, 2 * r);
                }
                check_rat_lower(c, "m2r-piecewise", bound, m2r, e.lower, to_double(m2r));
                check_close(c, "m2r-piecewise", e.lower, bound);
            }
        }
    }

    bool check_gen_order = c.has("gen-order");
    bool upper_only = c.has("gen-order-upper");
    if ((check_gen_order || upper_only) && n >= 2) {
        const char* id = check_gen_order ? "gen-order" : "gen-order-upper";
        for (int r : kOrders) {
            BigRat m2r = ex.central(2 * r);
            for (int j = 1; j <= n; ++j) {
                BoundEntry e = general_order_interval(s, j, r);
                BigRat dev = BigRat(ex.v[static_cast<size_t>(j - 1)]) - mean;
                check_powered_upper(c, id, dev, q_upper(n, j, r, m2r), r, e.upper,
                                    static_cast<double>(ex.v[static_cast<size_t>(j - 1)]));
                if (!upper_only || check_gen_order) {
                    check_powered_lower(c, id, dev, q_lower(n, j, r, m2r), r, e.lower,
                                        static_cast<double>(ex.v[static_cast<size_t>(j - 1)]));
                    check_contains(c, id, e,
                                   static_cast<double>(ex.v[static_cast<size_t>(j - 1)]));
                }
            }
        }
    }

    if (c.has("gen-segment") && n >= 2) {
        for (int r : kOrders) {
            BigRat m2r = ex.central(2 * r);
            for (int k = 1; k <= n; ++k)
                for (int j = k; j <= n; ++j) {
                    BoundEntry e = general_segment_interval(s, k, j, r);
                    if (k == 1 && j == n && r >= 2) {
                        c.check(!e.applicable, "gen-segment", 1.0, 0.0);
                        continue;
                    }
                    BigRat seg = ex.seg_mean(k, j);
                    BigRat dev = seg - mean;
                    check_powered_upper(c, "gen-segment", dev, q_upper(n, j, r, m2r), r, e.upper,
                                        to_double(seg));
                    check_powered_lower(c, "gen-segment", dev, q_lower(n, k, r, m2r), r, e.lower,
                                        to_double(seg));
                    check_contains(c, "gen-segment", e, to_double(seg));
                }
        }
    }

    if (c.has("abs-deviation") && n >= 2) {
        for (int r : kOrders) {
            BigRat m2r = ex.central(2 * r);
            for (int j = 1; j <= n; ++j) {
                BoundEntry e = abs_deviation_upper(s, j, r);
                BigRat dev = BigRat(ex.v[static_cast<size_t>(j - 1)]) - mean;
                if (dev < 0) dev = -dev;
                BigRat q = std::max(q_upper(n, j, r, m2r), q_lower(n, j, r, m2r));
                check_powered_upper(c, "abs-deviation", dev, q, r, e.upper, to_double(dev));
                c.check(to_double(dev) <= e.upper + slack(e.upper, to_double(dev)),
                        "abs-deviation", e.upper, to_double(dev));
            }
        }
    }

    // Third- and fourth-moment families need a non-constant sample.
    if (constant_sample) return;

    const BigRat raw2 = ex.raw(2), raw3 = ex.raw(3);
    const BigRat it1_raw_lo = (m * m * mean * mean - m * (m + mean) * raw2 + raw2 * raw2) /
                              (mean - m);
    const BigRat it1_raw_up = (M * (M + mean) * raw2 - M * M * mean * mean - raw2 * raw2) /
                              (M - mean);
    const BigRat it1_cen_lo = (m2 * m2 - rpow(mean - m, 2) * m2) / (mean - m);
    const BigRat it1_cen_up = (rpow(M - mean, 2) * m2 - m2 * m2) / (M - mean);
    const BigRat box_lo = -rpow(mean - m, 3) / 4;
    const BigRat box_up = rpow(M - mean, 3) / 4;
    const BigRat it3_den = (M - mean) * (mean - m) - m2;
    const BigRat combo = m4 - m2 * m2 - m3 * m3 / m2;

    std::vector<BoundEntry> m3b, m4b;
    if (n >= 2) {
        m3b = sharma_m3_bounds(s);
        m4b = sharma_m4_upper(s);
    }

    if (c.has("sharma-m3-raw")) {
        check_rat_lower(c, "sharma-m3-raw", it1_raw_lo, raw3, m3b[0].lower, to_double(raw3));
        check_rat_upper(c, "sharma-m3-raw", raw3, it1_raw_up, m3b[0].upper, to_double(raw3));
        check_close(c, "sharma-m3-raw", m3b[0].lower, it1_raw_lo);
        check_close(c, "sharma-m3-raw", m3b[0].upper, it1_raw_up);
    }
    if (c.has("sharma-m3-central")) {
        check_rat_lower(c, "sharma-m3-central", it1_cen_lo, m3, m3b[1].lower, to_double(m3));
        check_rat_upper(c, "sharma-m3-central", m3, it1_cen_up, m3b[1].upper, to_double(m3));
        check_close(c, "sharma-m3-central", m3b[1].lower, it1_cen_lo);
        check_close(c, "sharma-m3-central", m3b[1].upper, it1_cen_up);
    }
    if (c.has("sharma-m3-box")) {
        check_rat_lower(c, "sharma-m3-box", box_lo, m3, m3b[2].lower, to_double(m3));
        check_rat_upper(c, "sharma-m3-box", m3, box_up, m3b[2].upper, to_double(m3));
        check_close(c, "sharma-m3-box", m3b[2].lower, box_lo);
        check_close(c, "sharma-m3-box", m3b[2].upper, box_up);
    }
    if (c.has("sharma-m3-quadratic")) {
        BigRat lhs = m2 + rpow(m3 / (2 * m2), 2);
        BigRat rhs = rpow(range, 2) / 4;
        check_rat_upper(c, "sharma-m3-quadratic", lhs, rhs, m3b[3].check_lhs, m3b[3].check_rhs);
        check_verdict(c, "sharma-m3-quadratic", m3b[3]);
    }
    if (c.has("sharma-m3-abs")) {
        BigRat lhs = m3 * m3;
        BigRat rhs = rpow(range, 6) / 108;
        check_rat_upper(c, "sharma-m3-abs", lhs, rhs, m3b[4].check_lhs, m3b[4].check_rhs);
        check_verdict(c, "sharma-m3-abs", m3b[4]);
    }

    // it3 conditioning: exact zero <=> two-point support; the library refuses
    // slightly early, so only assert hard cases.
    const BigRat it3_scale = (M - mean) * (mean - m) + m2;
    const bool it3_solid = it3_den * BigRat(1000000) > it3_scale;
    BigRat it3_bound(0);
    if (it3_solid) {
        BigRat cross = m3 - (m + M - 2 * mean) * m2;
        it3_bound = (M - mean) * (mean - m) * m2 + (M + m - 2 * mean) * m3 -
                    cross * cross / it3_den;
    }

    if (c.has("sharma-m4")) {
        if (it3_den == 0) {
            c.check(!m4b[0].applicable, "sharma-m4", 1.0, 0.0);
        } else if (it3_solid) {
            c.check(m4b[0].applicable, "sharma-m4", 0.0, 1.0);
            check_rat_upper(c, "sharma-m4", m4, it3_bound, m4b[0].upper, to_double(m4));
            check_close(c, "sharma-m4", m4b[0].upper, it3_bound);
        }
    }
    if (c.has("sharma-m4-combo")) {
        BigRat rhs = rpow(range, 4) / 64;
        check_rat_upper(c, "sharma-m4-combo", combo, rhs, m4b[1].upper, to_double(combo));
        c.check(combo >= 0, "sharma-m4-combo", to_double(combo), 0.0);
        check_close(c, "sharma-m4-combo", m4b[1].upper, rhs);
    }

    if (!ex.distinct || n < 3) return;

    const BigRat b1 = beta1(n);
    const BigRat b2 = beta2(n);

    if (c.has("m3-raw-refined")) {
        BoundEntry e = m3_raw_bounds_refined(s);
        check_rat_lower(c, "m3-raw-refined", it1_raw_lo + b1, raw3, e.lower, to_double(raw3));
        check_rat_upper(c, "m3-raw-refined", raw3, it1_raw_up - b1, e.upper, to_double(raw3));
        check_close(c, "m3-raw-refined", e.lower, it1_raw_lo + b1);
        check_close(c, "m3-raw-refined", e.upper, it1_raw_up - b1);
    }
    if (c.has("m3-central-refined") || c.has("m3-box-refined")) {
        auto es = m3_central_bounds_refined(s);
        if (c.has("m3-central-refined")) {
            check_rat_lower(c, "m3-central-refined", it1_cen_lo + b1, m3, es[0].lower,
                            to_double(m3));
            check_rat_upper(c, "m3-central-refined", m3, it1_cen_up - b1, es[0].upper,
                            to_double(m3));
            check_close(c, "m3-central-refined", es[0].lower, it1_cen_lo + b1);
            check_close(c, "m3-central-refined", es[0].upper, it1_cen_up - b1);
        }
        if (c.has("m3-box-refined")) {
            check_rat_lower(c, "m3-box-refined", box_lo + b1, m3, es[1].lower, to_double(m3));
            check_rat_upper(c, "m3-box-refined", m3, box_up - b1, es[1].upper, to_double(m3));
            // tightening: the refined box sits inside the baseline box
            c.check(box_lo + b1 >= box_lo && box_up - b1 <= box_up, "m3-box-refined",
                    to_double(b1), 0.0);
        }
    }

    bool want_spread = c.has("m3-quadratic-refined") || c.has("spread-from-m3-quadratic") ||
                       c.has("m3-abs-refined") || c.has("spread-from-m3-abs");
    if (want_spread) {
        auto es = m3_spread_inequalities(s); // quad, quad-spread, abs, abs-spread
        if (c.has("m3-quadratic-refined")) {
            BigRat lhs = m2 + rpow((m3 + b1) / (2 * m2), 2);
            BigRat rhs = rpow(range, 2) / 4;
            check_rat_upper(c, "m3-quadratic-refined", lhs, rhs, es[0].check_lhs,
                            es[0].check_rhs);
            check_verdict(c, "m3-quadratic-refined", es[0]);
        }
        if (c.has("spread-from-m3-quadratic")) {
            BigRat lhs4 = 4 * (m2 + rpow((m3 + b1) / (2 * m2), 2));
            check_rat_upper(c, "spread-from-m3-quadratic", lhs4, rpow(range, 2),
                            es[1].lower, to_double(range));
            c.check(es[1].lower <= to_double(range) + slack(es[1].lower, to_double(range)),
                    "spread-from-m3-quadratic", es[1].lower, to_double(range));
        }
        if (c.has("m3-abs-refined")) {
            BigRat lhs = rpow(m3 + b1, 2);
            BigRat rhs = rpow(range, 6) / 108;
            check_rat_upper(c, "m3-abs-refined", lhs, rhs, es[2].check_lhs, es[2].check_rhs);
            check_verdict(c, "m3-abs-refined", es[2]);
        }
        if (c.has("spread-from-m3-abs")) {
            BigRat lhs = 108 * rpow(m3 + b1, 2);
            check_rat_upper(c, "spread-from-m3-abs", lhs, rpow(range, 6), es[3].lower,
                            to_double(range));
            c.check(es[3].lower <= to_double(range) + slack(es[3].lower, to_double(range)),
                    "spread-from-m3-abs", es[3].lower, to_double(range));
        }
    }

    if (c.has("m4-upper-refined")) {
        BoundEntry e = m4_upper_refined(s);
        if (it3_den == 0) {
            c.check(!e.applicable, "m4-upper-refined", 1.0, 0.0);
        } else if (it3_solid) {
            c.check(e.applicable, "m4-upper-refined", 0.0, 1.0);
            BigRat refined = it3_bound - b2;
            check_rat_upper(c, "m4-upper-refined", m4, refined, e.upper, to_double(m4));
            check_close(c, "m4-upper-refined", e.upper, refined);
            // tightening against it3, strict whenever beta2 > 0
            c.check(b2 > 0 ? refined < it3_bound : refined == it3_bound, "m4-upper-refined",
                    e.upper, to_double(it3_bound));
        }
    }
    if (c.has("m4-combo-refined")) {
        BoundEntry e = m4_combo_upper_refined(s);
        BigRat rhs = rpow(range, 4) / 64 - b2;
        check_rat_upper(c, "m4-combo-refined", combo, rhs, e.upper, to_double(combo));
        check_close(c, "m4-combo-refined", e.upper, rhs);
    }
    if (c.has("m4-count-lower")) {
        BoundEntry e = m4_lower_count_only(n, false);
        BigRat floor1 = m4_count_floor(n, false);
        check_rat_lower(c, "m4-count-lower", floor1, m4, e.lower, to_double(m4));
        check_close(c, "m4-count-lower", e.lower, floor1);
        if (ex.int_mean) {
            BoundEntry e2 = m4_lower_count_only(n, true);
            BigRat floor2 = m4_count_floor(n, true);
            check_rat_lower(c, "m4-count-lower", floor2, m4, e2.lower, to_double(m4));
            check_close(c, "m4-count-lower", e2.lower, floor2);
        }
    }
    if (c.has("m4-range-lower")) {
        BoundEntry e = m4_lower_with_range(s);
        BigRat corr = m4_range_correction(n, ex.int_mean);
        BigRat bound = rpow(range, 4) / (8 * n) + corr;
        check_rat_lower(c, "m4-range-lower", bound, m4, e.lower, to_double(m4));
        check_close(c, "m4-range-lower", e.lower, bound);
        // tightening against the plain r = 2 lower bound
        BigRat base = rpow(range, 4) / (8 * n);
        c.check(corr > 0 ? bound > base : bound == base, "m4-range-lower", e.lower,
                to_double(base));
    }
}

// Floating-point truth for the real-valued family.
struct RealTruth {
    std::vector<double> v; // descending
    long double mean = 0.0L;

    explicit RealTruth(std::vector<double> vals) : v(std::move(vals)) {
        std::sort(v.begin(), v.end(), std::greater<>());
        long double acc = 0.0L;
        for (double x : v) acc += x;
        mean = acc / static_cast<long double>(v.size());
    }
    int n() const { return static_cast<int>(v.size()); }
    long double central(int r) const {
        long double acc = 0.0L;
        for (double x : v) {
            long double d = x - mean, p = 1.0L;
            for (int i = 0; i < r; ++i) p *= d;
            acc += p;
        }
        return acc / static_cast<long double>(v.size());
    }
    long double raw(int r) const {
        long double acc = 0.0L;
        for (double x : v) {
            long double p = 1.0L;
            for (int i = 0; i < r; ++i) p *= x;
            acc += p;
        }
        return acc / static_cast<long double>(v.size());
    }
    long double seg(int k, int j) const {
        long double acc = 0.0L;
        for (int i = k; i <= j; ++i) acc += v[static_cast<size_t>(i - 1)];
        return acc / static_cast<long double>(j - k + 1);
    }
};

void check_real_sample(Ctx& c, const RealTruth& t) {
    const int n = t.n();
    Sample s(t.v);
    const double mean = static_cast<double>(t.mean);
    const double m2 = static_cast<double>(t.central(2));
    const double m3 = static_cast<double>(t.central(3));
    const double m4 = static_cast<double>(t.central(4));
    const double M = t.v.front(), m = t.v.back();
    const double range = M - m;

    auto upper_ok = [&](double x, double up) { return x <= up + slack(x, up); };
    auto lower_ok = [&](double lo, double x) { return lo - slack(lo, x) <= x; };

    if (c.has("samuelson")) {
        for (int j = 1; j <= n; ++j) {
            BoundEntry e = samuelson_interval(s, j);
            double x = t.v[static_cast<size_t>(j - 1)];
            c.check(lower_ok(e.lower, x) && upper_ok(x, e.upper), "samuelson",
                    x < e.lower ? e.lower : e.upper, x);
        }
    }
    if (c.has("ws-order") || c.has("gen-order")) {
        for (int j = 1; j <= n; ++j) {
            BoundEntry ws = ws_interval(s, j, j);
            double x = t.v[static_cast<size_t>(j - 1)];
            if (c.has("ws-order"))
                c.check(lower_ok(ws.lower, x) && upper_ok(x, ws.upper), "ws-order",
                        x < ws.lower ? ws.lower : ws.upper, x);
            if (c.has("gen-order")) {
                for (int r : kOrders) {
                    BoundEntry e = general_order_interval(s, j, r);
                    c.check(lower_ok(e.lower, x) && upper_ok(x, e.upper), "gen-order",
                            x < e.lower ? e.lower : e.upper, x);
                    if (r == 1) { // must reproduce Wolkowicz-Styan
                        c.check(std::abs(e.lower - ws.lower) <= 1e-12 * std::max(1.0, std::abs(ws.lower)) &&
                                    std::abs(e.upper - ws.upper) <= 1e-12 * std::max(1.0, std::abs(ws.upper)),
                                "gen-order", e.lower, ws.lower);
                    }
                }
            }
        }
    }
    if (c.has("ws-segment") || c.has("gen-segment")) {
        for (int k = 1; k <= n; ++k)
            for (int j = k; j <= n; ++j) {
                double seg = static_cast<double>(t.seg(k, j));
                if (c.has("ws-segment")) {
                    BoundEntry e = ws_interval(s, k, j);
                    c.check(lower_ok(e.lower, seg) && upper_ok(seg, e.upper), "ws-segment",
                            seg < e.lower ? e.lower : e.upper, seg);
                }
                if (c.has("gen-segment")) {
                    for (int r : kOrders) {
                        BoundEntry e = general_segment_interval(s, k, j, r);
                        if (k == 1 && j == n && r >= 2) {
                            c.check(!e.applicable, "gen-segment", 1.0, 0.0);
                            continue;
                        }
                        c.check(lower_ok(e.lower, seg) && upper_ok(seg, e.upper), "gen-segment",
                                seg < e.lower ? e.lower : e.upper, seg);
                    }
                }
            }
    }
    if (c.has("nagy")) {
        BoundEntry e = nagy_m2_lower(s);
        c.check(lower_ok(e.lower, m2), "nagy", e.lower, m2);
    }
    if (c.has("sharma-m2r")) {
        for (int r : kOrders) {
            BoundEntry e = sharma_m2r_lower(s, r);
            double m2r = static_cast<double>(t.central(2 * r));
            c.check(lower_ok(e.lower, m2r), "sharma-m2r", e.lower, m2r);
        }
    }
    if (c.has("sharma-saini")) {
        for (int r : {1, 2})
            for (int j = 1; j <= n; ++j) {
                BoundEntry e = sharma_saini_m2r_lower(s, r, j);
                double m2r = static_cast<double>(t.central(2 * r));
                c.check(lower_ok(e.lower, m2r), "sharma-saini", e.lower, m2r);
            }
    }
    if (c.has("m2r-piecewise")) {
        for (int r : kOrders)
            for (int j = 1; j <= n; ++j) {
                BoundEntry e = m2r_lower_piecewise(s, j, r);
                double m2r = static_cast<double>(t.central(2 * r));
                c.check(lower_ok(e.lower, m2r), "m2r-piecewise", e.lower, m2r);
            }
    }
    if (c.has("abs-deviation")) {
        for (int r : kOrders)
            for (int j = 1; j <= n; ++j) {
                BoundEntry e = abs_deviation_upper(s, j, r);
                double dev = std::abs(t.v[static_cast<size_t>(j - 1)] - mean);
                c.check(upper_ok(dev, e.upper), "abs-deviation", e.upper, dev);
            }
    }

    if (range <= 0.0) return;

    if (c.has("sharma-m3-raw") || c.has("sharma-m3-central") || c.has("sharma-m3-box") ||
        c.has("sharma-m3-quadratic") || c.has("sharma-m3-abs")) {
        auto m3b = sharma_m3_bounds(s);
        double raw3 = static_cast<double>(t.raw(3));
        if (c.has("sharma-m3-raw"))
            c.check(lower_ok(m3b[0].lower, raw3) && upper_ok(raw3, m3b[0].upper),
                    "sharma-m3-raw", m3b[0].upper, raw3);
        if (c.has("sharma-m3-central"))
            c.check(lower_ok(m3b[1].lower, m3) && upper_ok(m3, m3b[1].upper),
                    "sharma-m3-central", m3b[1].upper, m3);
        if (c.has("sharma-m3-box"))
            c.check(lower_ok(m3b[2].lower, m3) && upper_ok(m3, m3b[2].upper), "sharma-m3-box",
                    m3b[2].upper, m3);
        if (c.has("sharma-m3-quadratic"))
            c.check(upper_ok(m3b[3].check_lhs, m3b[3].check_rhs), "sharma-m3-quadratic",
                    m3b[3].check_lhs, m3b[3].check_rhs);
        if (c.has("sharma-m3-abs"))
            c.check(upper_ok(m3b[4].check_lhs, m3b[4].check_rhs), "sharma-m3-abs",
                    m3b[4].check_lhs, m3b[4].check_rhs);
    }
    if (c.has("sharma-m4") || c.has("sharma-m4-combo")) {
        auto m4b = sharma_m4_upper(s);
        if (c.has("sharma-m4") && m4b[0].applicable) {
            double den = (M - mean) * (mean - m) - m2;
            double den_scale = (M - mean) * (mean - m) + m2;
            if (den > 1e-6 * den_scale) // skip ill-conditioned quotients
                c.check(upper_ok(m4, m4b[0].upper), "sharma-m4", m4b[0].upper, m4);
        }
        if (c.has("sharma-m4-combo")) {
            double combo = m4 - m2 * m2 - m3 * m3 / m2;
            c.check(upper_ok(combo, m4b[1].upper), "sharma-m4-combo", m4b[1].upper, combo);
        }
    }
}

void validate_generator(const GeneratorSpec& gen) {
    if (gen.n_min < 2 || gen.n_max < gen.n_min || gen.n_max > 64)
        throw InvalidInput("sample size range must satisfy 2 <= n_min <= n_max <= 64");
    if (!(gen.lo < gen.hi)) throw InvalidInput("value range is empty");
    if (gen.exhaustive && gen.family != Family::distinct_integers)
        throw InvalidInput("exhaustive enumeration is defined for the distinct-integer family");
    if (!gen.exhaustive && gen.count < 1) throw InvalidInput("count must be positive");
    if (gen.family != Family::real_uniform) {
        long long ilo = std::llround(std::ceil(gen.lo));
        long long ihi = std::llround(std::floor(gen.hi));
        long long span = ihi - ilo + 1;
        if (span < 2) throw InvalidInput("integer families need at least two integers in range");
        if (gen.family == Family::distinct_integers && span < gen.n_max)
            throw InvalidInput("range cannot supply n distinct integers");
    }
}

} // namespace

void enumerate_distinct_integer_samples(
    int n, long long lo, long long hi,
    const std::function<void(std::span<const long long>)>& fn) {
    if (n < 1) throw InvalidInput("subset size must be positive");
    if (hi - lo + 1 < n) throw InvalidInput("range cannot supply n distinct integers");
    std::vector<long long> asc(static_cast<size_t>(n));
    std::iota(asc.begin(), asc.end(), 0);
    for (auto& x : asc) x += lo;
    std::vector<long long> desc(static_cast<size_t>(n));
    for (;;) {
        for (int i = 0; i < n; ++i) desc[static_cast<size_t>(i)] = asc[static_cast<size_t>(n - 1 - i)];
        fn(desc);
        int i = n - 1;
        while (i >= 0 && asc[static_cast<size_t>(i)] == hi - (n - 1 - i)) --i;
        if (i < 0) break;
        ++asc[static_cast<size_t>(i)];
        for (int t = i + 1; t < n; ++t) asc[static_cast<size_t>(t)] = asc[static_cast<size_t>(i)] + (t - i);
    }
}

BigRat exact_mean(std::span<const long long> values) {
    if (values.empty()) throw EmptySample("empty sample");
    BigInt acc(0);
    for (long long x : values) acc += x;
    return BigRat(acc, BigInt(static_cast<long long>(values.size())));
}

BigRat exact_central_moment(std::span<const long long> values, int r) {
    if (values.empty()) throw EmptySample("empty sample");
    if (r < 1) throw InvalidInput("moment order must be >= 1");
    BigRat mu = exact_mean(values);
    BigRat acc(0);
    for (long long x : values) acc += rpow(BigRat(x) - mu, r);
    return acc / static_cast<long long>(values.size());
}

std::vector<RootBracket> isolate_real_roots(std::span<const double> monic, double lo,
                                            double hi) {
    if (!(lo <= hi)) throw InvalidInput("empty isolation interval");
    RatPoly p = rat_poly_from(monic);
    return isolate_impl(std::move(p), rat_from_double(lo), rat_from_double(hi));
}

std::vector<RootBracket> isolate_real_roots(std::span<const double> monic) {
    RatPoly p = rat_poly_from(monic);
    BigRat bound(1);
    for (size_t i = 1; i < p.c.size(); ++i) {
        BigRat a = p.c[i];
        if (a < 0) a = -a;
        if (a > bound) bound = a;
    }
    bound += 1;
    return isolate_impl(std::move(p), -bound, bound);
}

std::vector<double> characteristic_polynomial(const SquareMatrix& a) {
    int n = a.order();
    if (n > 16) throw InvalidInput("characteristic polynomial supports n <= 16");
    std::vector<double> p(static_cast<size_t>(n) + 1, 0.0); // power sums, p[k]
    {
        SquareMatrix pw = a;
        p[1] = pw.trace();
        for (int k = 2; k <= n; ++k) {
            pw = pw * a;
            p[static_cast<size_t>(k)] = pw.trace();
        }
    }
    std::vector<double> e(static_cast<size_t>(n) + 1, 0.0); // elementary symmetric
    e[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        double sign = 1.0;
        for (int i = 1; i <= k; ++i) {
            acc += sign * e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i)];
            sign = -sign;
        }
        e[static_cast<size_t>(k)] = acc / k;
    }
    std::vector<double> coeffs(static_cast<size_t>(n) + 1, 0.0);
    double sign = 1.0;
    for (int k = 0; k <= n; ++k) {
        coeffs[static_cast<size_t>(k)] = sign * e[static_cast<size_t>(k)];
        sign = -sign;
    }
    return coeffs;
}

std::vector<double> real_eigenvalues(const SquareMatrix& a) {
    int n = a.order();
    std::vector<double> coeffs = characteristic_polynomial(a);
    std::vector<RootBracket> brackets = isolate_real_roots(coeffs);

    std::vector<double> out;
    if (static_cast<int>(brackets.size()) == n) {
        for (const auto& b : brackets) out.push_back(b.value);
    } else {
        // Fewer distinct roots than n: recover multiplicities from how many
        // derivatives vanish at each root (safe at these sizes; the spectrum
        // is assumed real).
        std::vector<std::vector<double>> ders{coeffs};
        for (int k = 1; k <= n; ++k) {
            const auto& prev = ders.back();
            std::vector<double> d;
            int deg = static_cast<int>(prev.size()) - 1;
            for (int i = 0; i < deg; ++i) d.push_back(prev[static_cast<size_t>(i)] * (deg - i));
            ders.push_back(std::move(d));
        }
        auto eval_abs_scale = [](const std::vector<double>& c, double x) {
            double acc = 0.0, ax = std::abs(x);
            for (double ci : c) acc = acc * ax + std::abs(ci);
            return acc;
        };
        auto eval_d = [](const std::vector<double>& c, double x) {
            double acc = 0.0;
            for (double ci : c) acc = acc * x + ci;
            return acc;
        };
        for (const auto& b : brackets) {
            int mult = 0;
            for (int k = 0; k <= n; ++k) {
                double val = eval_d(ders[static_cast<size_t>(k)], b.value);
                double scale = eval_abs_scale(ders[static_cast<size_t>(k)], b.value);
                if (std::abs(val) > 1e-7 * std::max(1.0, scale)) break;
                ++mult;
            }
            if (mult == 0) mult = 1;
            for (int i = 0; i < mult; ++i) out.push_back(b.value);
        }
        if (static_cast<int>(out.size()) != n)
            throw NotAllRootsReal("could not account for every eigenvalue as a real root");
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

SquareMatrix similarity_fixture(std::span<const long long> spectrum, std::uint64_t seed) {
    int n = static_cast<int>(spectrum.size());
    if (n < 1) throw InvalidInput("spectrum must be nonempty");
    if (n > 16) throw InvalidInput("fixtures support n <= 16");
    SquareMatrix a(n);
    for (int i = 0; i < n; ++i) a.at(i, i) = static_cast<double>(spectrum[static_cast<size_t>(i)]);
    if (n == 1) return a;

    SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n)));
    // Two rounds of pairwise-disjoint unit shears. Disjointness keeps the
    // transform entries in {-1, 0, 1} so powers up to A^8 stay exact for
    // spectra within desk scale.
    for (int offset : {0, 1}) {
        for (int p = offset; p + 1 < n; p += 2) {
            double cshear = rng.flip() ? 1.0 : -1.0;
            int i = p, j = p + 1;
            if (rng.flip()) std::swap(i, j);
            // A <- S A S^{-1} with S = I + c E_{ij}
            for (int col = 0; col < n; ++col) a.at(i, col) += cshear * a.at(j, col);
            for (int row = 0; row < n; ++row) a.at(row, j) -= cshear * a.at(row, i);
        }
    }
    return a;
}

VerificationRun verify(const GeneratorSpec& gen, const std::vector<std::string>& selectors) {
    validate_generator(gen);
    VerificationRun run;
    run.gen = gen;
    run.bounds = resolve_selectors(selectors, gen.family);

    Ctx ctx;
    ctx.run = &run;

    auto handle_integer = [&](std::span<const long long> values) {
        ExactSample ex(values);
        ctx.input.assign(values.begin(), values.end());
        ++run.inputs;
        check_integer_sample(ctx, ex);
    };

    switch (gen.family) {
    case Family::distinct_integers: {
        long long ilo = std::llround(std::ceil(gen.lo));
        long long ihi = std::llround(std::floor(gen.hi));
        if (gen.exhaustive) {
            for (int n = gen.n_min; n <= gen.n_max; ++n)
                enumerate_distinct_integer_samples(n, ilo, ihi, handle_integer);
        } else {
            SplitMix64 rng(gen.seed);
            std::vector<long long> vals;
            for (long long i = 0; i < gen.count; ++i) {
                int n = static_cast<int>(rng.in_range(gen.n_min, gen.n_max));
                vals.clear();
                while (static_cast<int>(vals.size()) < n) {
                    long long x = rng.in_range(ilo, ihi);
                    if (std::find(vals.begin(), vals.end(), x) == vals.end())
                        vals.push_back(x);
                }
                handle_integer(vals);
            }
        }
        break;
    }
    case Family::two_block: {
        long long ilo = std::llround(std::ceil(gen.lo));
        long long ihi = std::llround(std::floor(gen.hi));
        SplitMix64 rng(gen.seed);
        std::vector<long long> vals;
        for (long long i = 0; i < gen.count; ++i) {
            int n = static_cast<int>(rng.in_range(gen.n_min, gen.n_max));
            long long a = rng.in_range(ilo, ihi);
            long long b = a;
            while (b == a) b = rng.in_range(ilo, ihi);
            if (a < b) std::swap(a, b);
            int q = static_cast<int>(rng.in_range(1, n - 1));
            vals.assign(static_cast<size_t>(q), a);
            vals.insert(vals.end(), static_cast<size_t>(n - q), b);
            handle_integer(vals);
        }
        break;
    }
    case Family::real_uniform: {
        SplitMix64 rng(gen.seed);
        std::vector<double> vals;
        for (long long i = 0; i < gen.count; ++i) {
            int n = static_cast<int>(rng.in_range(gen.n_min, gen.n_max));
            vals.clear();
            for (int k = 0; k < n; ++k) vals.push_back(gen.lo + rng.unit() * (gen.hi - gen.lo));
            RealTruth t(vals);
            ctx.input = t.v;
            ++run.inputs;
            check_real_sample(ctx, t);
        }
        break;
    }
    }
    return run;
}

} // namespace mbounds::oracle
