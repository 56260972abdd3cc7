#pragma once

#include "invar/families.hpp"
#include "invar/parallel.hpp"
#include "invar/report.hpp"

#include <optional>

namespace invar {

// Witness that target = beta0*p1 + gamma0*p2 + delta0*p3 with each
// cofactor itself a kernel element.
struct MembershipCertificate {
    Polynomial target;
    Polynomial p1, p2, p3; // in K[x,s,t,u,v]
};

bool validate_certificate(const MembershipCertificate& cert);

// Ideal-level form of the fixed-point / plinth / nullcone identities:
// rad(D-images) = rad(x,s,t), the plinth certificates, rad(x^3,gamma0,
// delta0) = rad(x,s), and every positive-degree archive invariant in (x,s).
Report verify_lemma31(const FamilyArchive& archive);

// The v-degree-0 relation of one family at level n = i+j = i'+j' >= 2:
// computes tail_i*tail_j - tail_i'*tail_j', subtracts the structured
// correction, and decomposes the rest over beta0*C + gamma0*C + delta0*C
// where C is spanned by products of tails and g. Base cases additionally
// pin the exact sign of the correction.
Report v0_relation(const FamilyArchive& archive, FamilyKind kind, int i, int j, int ip, int jp);

// Certificates that squares of family members lie in the ideal: direct
// certificates for (gamma_n)^2 and (delta_n)^2, the two-step route for
// beta ((beta_n)^2 = beta_{2n} beta_0 - n^2 gamma_{2n-2} + ideal part,
// then a certificate for (beta_n)^4). Requires the archive built to 2n.
Report square_membership(const FamilyArchive& archive, FamilyKind kind, int n);
std::optional<MembershipCertificate> find_certificate(const FamilyArchive& archive,
                                                      const Polynomial& target, int max_index);

// g^k stays outside the ideal: per k, (i) the three cofactor bidegrees
// carry no invariant at all (full-ring slice kernels are empty), and
// (ii) x^2 g^k is not in the image of Delta, with normal form y1^2 y4^k s.
Report g_exclusion(const FamilyArchive& archive, int k_max, Exec mode = default_exec());

// deg_v(eta0 * eta'_{N+1} - eta1 * eta'_N) <= N for all nine ordered pairs,
// and each product eta0 * eta'_{N+1} subducts to 0 against the level-N set.
Report conductor_checks(const FamilyArchive& archive, int N);

// Aggregate verdict: verified powers for every family member of index <= N,
// the exclusion side for g, the leading-term decomposition statement, and
// the one-variable quotient sanity check.
Report fg_ideal_summary(const FamilyArchive& archive, int N, Exec mode = default_exec());

} // namespace invar
