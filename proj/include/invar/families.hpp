#pragma once

#include "invar/derivation.hpp"
#include "invar/grading.hpp"
#include "invar/report.hpp"

#include <array>
#include <iosfwd>

namespace invar {

enum class FamilyKind { beta = 0, gamma = 1, delta = 2 };

inline const char* family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::beta: return "beta";
        case FamilyKind::gamma: return "gamma";
        default: return "delta";
    }
}

// One member of an infinite invariant family: the invariant itself (in
// K[x,s,t,u,v]), its v-degree-0 tail (in K[x,s,t,u]) and whether it came
// from the seed list or the inductive construction.
struct FamilyEntry {
    Polynomial eta;
    Polynomial tail;
    bool seeded = false;
};

// The three families plus the fixed kernel generator g. Entries for index
// n satisfy, with (d0, r0) = (1,0) / (6,2) / (9,3) per family:
//   D(eta_n) = 0, bidegree (2n+d0, n+r0),
//   leading term  x v^n / 2 x^3 t v^n / 3 x^6 u v^n,
//   v^j-coefficient of eta_n equals binom(n,j) * tail_{n-j},
//   Delta(tail_n) = -n x^2 tail_{n-1}.
class FamilyArchive {
public:
    // seeds from the closed forms: beta0..delta0, g, beta1..delta1.
    static FamilyArchive seed();

    // builds every missing index up to target_n (inclusive) for one family
    // or all three. Construction failures throw; a thrown archive is not
    // observable in a partially extended state by the caller contract.
    void extend(FamilyKind kind, int target_n);
    void extend_all(int target_n);

    int depth(FamilyKind kind) const { return (int)fam((int)kind).size() - 1; }
    const Polynomial& eta(FamilyKind kind, int n) const;
    const Polynomial& tail(FamilyKind kind, int n) const;
    const Polynomial& g() const { return g_; }

    // {g, beta_i, gamma_i, delta_i : i <= N} as polynomials in K[x,s,t,u,v];
    // g first, then by family and index.
    std::vector<Polynomial> sagbi_set(int N) const;

    // re-checks every stored invariant plus the three-leading-layer
    // display comparison (sign-level mismatches of the printed general
    // forms are annotated, not failed).
    Report verify() const;

    // line-oriented text archive; loading re-verifies all invariants.
    void save(std::ostream& os) const;
    static FamilyArchive load(std::istream& is);

private:
    std::array<std::vector<FamilyEntry>, 3> families_;
    Polynomial g_;

    std::vector<FamilyEntry>& fam(int k) { return families_[(size_t)k]; }
    const std::vector<FamilyEntry>& fam(int k) const { return families_[(size_t)k]; }
    void extend_one(FamilyKind kind);
    void check_entry(FamilyKind kind, int n, const FamilyEntry& e) const;
};

// bidegree of tail_n of one family: (2n+1, n), (2n+6, n+2), (2n+9, n+3).
std::pair<long, long> tail_bidegree(FamilyKind kind, int n);

} // namespace invar
