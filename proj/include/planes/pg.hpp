#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "planes/plane.hpp"

namespace planes {

/// GF(p^k) with exhaustive table-verified arithmetic; supported orders are
/// small prime powers with a fixed published modulus each, so outputs are
/// bit-exact across builds. Elements are 0..q-1, digits base p being the
/// polynomial coefficients (little-endian).
class FiniteField {
public:
    static FiniteField make(int q);                        // published modulus
    static FiniteField with_modulus(int p, int k, std::vector<int> modulus);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return k_; }
    std::string modulus_string() const;

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const; // throws on 0

private:
    FiniteField() = default;
    void build_tables();
    void verify_axioms() const;

    int q_ = 0, p_ = 0, k_ = 0;
    std::vector<int> modulus_; // k+1 coefficients, monic
    std::vector<int> add_, mul_, neg_, inv_;
};

/// Supported orders for gf(): 2,3,4,5,7,8,9,11,13,16.
FiniteField gf(int q);
const std::vector<int>& gf_supported_orders();

/// PG(2,q): points are scale-normalized nonzero coordinate triples
/// (leftmost nonzero entry 1), lines the kernels of normalized functionals.
Plane pg2(const FiniteField& F);

// ---- Pappus ------------------------------------------------------------------

struct PappusWitness {
    std::string line1, line2;             // canonical labels of the host lines
    std::array<std::string, 3> triple1;   // p, q, r on line1
    std::array<std::string, 3> triple2;   // p', q', r' on line2
    std::array<std::string, 3> meets;     // (pq' x p'q), (pr' x p'r), (qr' x q'r)
    std::string to_report() const;
};

/// Exhaustive scan over all Pappus configurations realized in P. Returns the
/// canonically first violating configuration or nullopt.
std::optional<PappusWitness> pappus_check(const Plane& P, int jobs = 1);

bool verify_pappus_witness(const Plane& P, const PappusWitness& w);

/// Builds PG(2,q) and PG(2,q'), reports the Pappus verdicts and whether the
/// planes are isomorphic (iff q = q' for prime powers at this scale).
Report pappian_pipeline(int q1, int q2);

} // namespace planes
