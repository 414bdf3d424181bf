#include "planes/pg.hpp"

#include <algorithm>
#include <sstream>

#include "planes/iso.hpp"
#include "planes/parallel.hpp"

namespace planes {

namespace {

struct ModulusEntry {
    int q, p, k;
    std::vector<int> coeffs; // little-endian, monic
};

// Fixed published moduli (coefficients of x^0..x^k).
const std::vector<ModulusEntry>& modulus_table() {
    static const std::vector<ModulusEntry> t = {
        {2, 2, 1, {0, 1}},        {3, 3, 1, {0, 1}},
        {4, 2, 2, {1, 1, 1}},     // x^2+x+1
        {5, 5, 1, {0, 1}},        {7, 7, 1, {0, 1}},
        {8, 2, 3, {1, 1, 0, 1}},  // x^3+x+1
        {9, 3, 2, {1, 0, 1}},     // x^2+1
        {11, 11, 1, {0, 1}},      {13, 13, 1, {0, 1}},
        {16, 2, 4, {1, 1, 0, 0, 1}}, // x^4+x+1
    };
    return t;
}

std::vector<int> poly_of(int e, int p, int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
        c[i] = e % p;
        e /= p;
    }
    return c;
}

int of_poly(const std::vector<int>& c, int p, int k) {
    int e = 0;
    for (int i = k - 1; i >= 0; --i) e = e * p + c[i];
    return e;
}

} // namespace

const std::vector<int>& gf_supported_orders() {
    static const std::vector<int> orders = [] {
        std::vector<int> v;
        for (const auto& m : modulus_table()) v.push_back(m.q);
        return v;
    }();
    return orders;
}

FiniteField FiniteField::make(int q) {
    for (const auto& m : modulus_table())
        if (m.q == q) return with_modulus(m.p, m.k, m.coeffs);
    throw PlaneError(Err::UnsupportedOrder, std::to_string(q));
}

FiniteField FiniteField::with_modulus(int p, int k, std::vector<int> modulus) {
    FiniteField f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = 1;
    for (int i = 0; i < k; ++i) f.q_ *= p;
    f.modulus_ = std::move(modulus);
    if (int(f.modulus_.size()) != k + 1 || f.modulus_[k] != 1)
        throw PlaneError(Err::UnsupportedOrder, "modulus must be monic of degree k");
    f.build_tables();
    f.verify_axioms();
    return f;
}

void FiniteField::build_tables() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, -1);
    for (int a = 0; a < q_; ++a) {
        auto pa = poly_of(a, p_, k_);
        {
            std::vector<int> c(k_);
            for (int i = 0; i < k_; ++i) c[i] = (p_ - pa[i]) % p_;
            neg_[a] = of_poly(c, p_, k_);
        }
        for (int b = 0; b < q_; ++b) {
            auto pb = poly_of(b, p_, k_);
            std::vector<int> s(k_);
            for (int i = 0; i < k_; ++i) s[i] = (pa[i] + pb[i]) % p_;
            add_[a * q_ + b] = of_poly(s, p_, k_);

            // polynomial product reduced mod the modulus
            std::vector<int> prod(2 * k_ - 1, 0);
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
            for (int d = 2 * k_ - 2; d >= k_; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < k_; ++i)
                    prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
            }
            prod.resize(k_);
            mul_[a * q_ + b] = of_poly(prod, p_, k_);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = b;
}

void FiniteField::verify_axioms() const {
    auto fail = [&](const std::string& what) -> void {
        throw PlaneError(Err::UnsupportedOrder,
                         "not a field (q=" + std::to_string(q_) + "): " + what);
    };
    for (int a = 0; a < q_; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a) fail("identity");
        if (add(a, neg(a)) != 0) fail("negation");
        if (a != 0 && (inv_[a] < 0 || mul(a, inv_[a]) != 1)) fail("inverse");
        for (int b = 0; b < q_; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
            for (int c = 0; c < q_; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) fail("add associativity");
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("mul associativity");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
            }
        }
    }
}

int FiniteField::inv(int a) const {
    if (a == 0) throw PlaneError(Err::UnknownElement, "inverse of 0");
    return inv_[a];
}

std::string FiniteField::modulus_string() const {
    if (k_ == 1) return "x (prime field)";
    std::ostringstream os;
    bool first = true;
    for (int d = k_; d >= 0; --d) {
        int c = modulus_[d];
        if (c == 0) continue;
        if (!first) os << "+";
        if (d == 0 || c != 1) os << c;
        if (d >= 1) {
            os << "x";
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

FiniteField gf(int q) { return FiniteField::make(q); }

Plane pg2(const FiniteField& F) {
    int q = F.q();
    // normalized triples: leftmost nonzero coordinate is 1
    std::vector<std::array<int, 3>> pts;
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
    pts.push_back({0, 0, 1});

    auto label = [](const std::array<int, 3>& v) {
        return std::to_string(v[0]) + "." + std::to_string(v[1]) + "." + std::to_string(v[2]);
    };

    std::vector<std::string> points;
    points.reserve(pts.size());
    for (const auto& v : pts) points.push_back(label(v));

    std::vector<std::vector<std::string>> lines;
    for (const auto& f : pts) { // functionals normalize identically
        std::vector<std::string> l;
        for (const auto& v : pts) {
            int s = F.add(F.add(F.mul(f[0], v[0]), F.mul(f[1], v[1])), F.mul(f[2], v[2]));
            if (s == 0) l.push_back(label(v));
        }
        lines.push_back(std::move(l));
    }
    return Plane::from_raw(points, lines);
}

// ---- Pappus ------------------------------------------------------------------

std::string PappusWitness::to_report() const {
    std::ostringstream os;
    os << "report v1\n";
    os << "kind pappus\n";
    os << "line1 " << line1 << "\n";
    os << "line2 " << line2 << "\n";
    os << "triple1 " << triple1[0] << " " << triple1[1] << " " << triple1[2] << "\n";
    os << "triple2 " << triple2[0] << " " << triple2[1] << " " << triple2[2] << "\n";
    os << "meet12 " << meets[0] << "\n";
    os << "meet13 " << meets[1] << "\n";
    os << "meet23 " << meets[2] << "\n";
    os << "verdict noncollinear\n";
    return os.str();
}

namespace {

/// Cross pairs of the Pappus hexagon: (p,q')x(p',q), (p,r')x(p',r), (q,r')x(q',r).
std::array<std::array<int, 4>, 3> pappus_pairs(const std::array<int, 3>& t1,
                                               const std::array<int, 3>& t2) {
    return {{{t1[0], t2[1], t2[0], t1[1]},
             {t1[0], t2[2], t2[0], t1[2]},
             {t1[1], t2[2], t2[1], t1[2]}}};
}

} // namespace

std::optional<PappusWitness> pappus_check(const Plane& P, int jobs) {
    int L = P.stored_line_count();
    auto scan_line1 = [&](size_t i1) -> std::optional<PappusWitness> {
        int l1 = int(i1);
        for (int l2 = 0; l2 < L; ++l2) {
            if (l2 == l1) continue;
            if (l2 < l1) continue; // unordered host pair; triples range over both orders
            int cross = P.stored_line_bits(l1).intersect_single(P.stored_line_bits(l2));
            std::vector<int> on1, on2;
            for (int m : P.stored_line(l1))
                if (m != cross) on1.push_back(m);
            for (int m : P.stored_line(l2))
                if (m != cross) on2.push_back(m);
            if (on1.size() < 3 || on2.size() < 3) continue;

            std::array<int, 3> t1{}, t2{};
            // ordered triples of distinct points on each host line
            for (int a : on1)
                for (int b : on1) {
                    if (b == a) continue;
                    for (int c : on1) {
                        if (c == a || c == b) continue;
                        t1 = {a, b, c};
                        for (int a2 : on2)
                            for (int b2 : on2) {
                                if (b2 == a2) continue;
                                for (int c2 : on2) {
                                    if (c2 == a2 || c2 == b2) continue;
                                    t2 = {a2, b2, c2};
                                    std::array<std::string, 3> meets;
                                    bool ok = true;
                                    for (int t = 0; t < 3 && ok; ++t) {
                                        auto [x, y, u, v] = pappus_pairs(t1, t2)[t];
                                        Line la = join(P, P.point_label(x), P.point_label(y));
                                        Line lb = join(P, P.point_label(u), P.point_label(v));
                                        if (la == lb) {
                                            ok = false;
                                            break;
                                        }
                                        MeetResult m = meet(P, la, lb);
                                        if (m.bottom) {
                                            ok = false;
                                            break;
                                        }
                                        meets[t] = m.point;
                                    }
                                    if (!ok) continue;
                                    if (meets[0] == meets[1] || meets[0] == meets[2] ||
                                        meets[1] == meets[2])
                                        continue;
                                    if (collinear(P, meets[0], meets[1], meets[2])) continue;
                                    PappusWitness w;
                                    w.line1 = P.line_value(l1).label();
                                    w.line2 = P.line_value(l2).label();
                                    w.triple1 = {P.point_label(t1[0]), P.point_label(t1[1]),
                                                 P.point_label(t1[2])};
                                    w.triple2 = {P.point_label(t2[0]), P.point_label(t2[1]),
                                                 P.point_label(t2[2])};
                                    w.meets = meets;
                                    return w;
                                }
                            }
                    }
                }
        }
        return std::nullopt;
    };
    return parallel_first(size_t(L), jobs, scan_line1);
}

bool verify_pappus_witness(const Plane& P, const PappusWitness& w) {
    std::vector<std::string> six;
    for (const auto& x : w.triple1) six.push_back(x);
    for (const auto& x : w.triple2) six.push_back(x);
    std::vector<std::string> uniq = six;
    std::sort(uniq.begin(), uniq.end());
    if (std::unique(uniq.begin(), uniq.end()) != uniq.end()) return false;
    for (const auto& x : six)
        if (!P.has_point(x)) return false;

    Line l1 = join(P, w.triple1[0], w.triple1[1]);
    Line l2 = join(P, w.triple2[0], w.triple2[1]);
    if (l1.label() != w.line1 || l2.label() != w.line2) return false;
    if (!std::binary_search(l1.members.begin(), l1.members.end(), w.triple1[2])) return false;
    if (!std::binary_search(l2.members.begin(), l2.members.end(), w.triple2[2])) return false;
    if (l1 == l2) return false;
    MeetResult cross = meet(P, l1, l2);
    if (!cross.bottom)
        for (const auto& x : six)
            if (x == cross.point) return false;

    const std::array<std::array<int, 2>, 3> idx{{{0, 1}, {0, 2}, {1, 2}}};
    for (int t = 0; t < 3; ++t) {
        auto [s1, s2] = idx[t];
        Line la = join(P, w.triple1[s1], w.triple2[s2]);
        Line lb = join(P, w.triple2[s1], w.triple1[s2]);
        const std::string& m = w.meets[t];
        if (!std::binary_search(la.members.begin(), la.members.end(), m)) return false;
        if (!std::binary_search(lb.members.begin(), lb.members.end(), m)) return false;
    }
    if (w.meets[0] == w.meets[1] || w.meets[0] == w.meets[2] || w.meets[1] == w.meets[2])
        return false;
    return !collinear(P, w.meets[0], w.meets[1], w.meets[2]);
}

Report pappian_pipeline(int q1, int q2) {
    Report rep;
    rep.subject = "pappian pipeline (" + std::to_string(q1) + ", " + std::to_string(q2) + ")";
    Plane P1 = pg2(gf(q1));
    Plane P2 = pg2(gf(q2));
    auto w1 = pappus_check(P1);
    auto w2 = pappus_check(P2);
    rep.add("pappus holds on pg2(" + std::to_string(q1) + ")", !w1.has_value());
    rep.add("pappus holds on pg2(" + std::to_string(q2) + ")", !w2.has_value());
    bool iso = isomorphic(P1, P2).has_value();
    rep.add("isomorphic iff equal order", iso == (q1 == q2),
            std::string(iso ? "isomorphic" : "non-isomorphic") +
                "; fields of equal prime-power order are isomorphic, so the "
                "field-isomorphism criterion degenerates to order equality here");
    return rep;
}

} // namespace planes
