#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly {

struct AuditCheck {
    std::string name;
    bool pass = false;
    std::string details;
};

// One batch verification run: named checks against a fixed expected outcome,
// each tied to a numbered acceptance criterion of the suite.
struct AuditResult {
    std::string name;
    std::string criterion_ref;
    std::vector<AuditCheck> checks;

    bool pass() const {
        for (const AuditCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// x^6 + a x^5 - a^4 x^2 permutes the 27-element field for every nonzero a,
// with the exact integer facts 27 > 24 and 27 > 22 spelled out.
AuditResult audit_mullen();

// Factorial identity q! = q(q-1)(1 + k2 + q k1); exhaustive map count for
// q <= 7.
AuditResult audit_wilson(std::uint32_t q);

// No value-set bound violation among monic f with f(0) = 0 and
// 2 <= deg <= max_degree.
AuditResult audit_wan_bound(std::uint32_t q, std::uint32_t max_degree);

// Set equality between the exhaustive normalized classification and the
// table expansion for (q, degree).
AuditResult audit_tables(std::uint32_t q, std::uint32_t degree, unsigned jobs = 0);

// Degree-6 orthomorphism classification over the 9- and 27-element fields
// plus the degree bound over all permutations of F_5 and F_7.
AuditResult audit_ortho(unsigned jobs = 0);

// Emptiness of the degree-6 classification over the fields where none can
// exist, and of every odd degree-2 case; the 27-element field must stay
// nonempty.
AuditResult audit_nonexistence(unsigned jobs = 0);

// Every implemented criterion agrees with brute force across the exhaustive
// small corpora and seeded random samples.
AuditResult audit_criteria_agreement(std::uint64_t seed, std::size_t random_per_field = 5000);

// Closed-form family criteria against brute force across their parameter
// grids.
AuditResult audit_families();

// Digit-method multinomials against exact binomial chains, all t <= 30 with
// up to five parts, p in {2, 3, 5, 7}.
AuditResult audit_lucas();

const std::vector<std::string>& audit_names();

// Dispatch by name for the command line; q/degree/max_degree apply where
// the audit takes them.  Throws UnknownAudit.
AuditResult run_audit(const std::string& name, std::uint32_t q, std::uint32_t degree,
                      std::uint32_t max_degree, std::uint64_t seed, unsigned jobs);

}  // namespace permpoly
