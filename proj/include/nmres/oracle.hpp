#pragma once

#include <cstdint>

#include "nmres/identities.hpp"
#include "nmres/sphere.hpp"

namespace nmres {

/// Seeded repetitions of one registered identity check. Deterministic for a
/// fixed (tag, trials, seed): reruns produce identical cases.
std::vector<OracleCase> check_identity(const std::string& tag, int trials,
                                       std::uint64_t seed,
                                       const Params& p = Params::symbolic());

enum class Functional { Torsion, OneForm, Boundary, Sanity };

/// Parses torsion | one-form | boundary | sanity; throws UnknownFunctional.
Functional parse_functional(const std::string& name);

/// End-to-end rerun of the residue pipeline at a fixed rational parameter
/// point; must agree with evaluating the symbolic result there.
SphereValue full_pipeline_numeric(const GaussRat& a, const GaussRat& b, Functional f);

}  // namespace nmres
