#include "nmres/oracle.hpp"

#include "nmres/boundary.hpp"
#include "nmres/errors.hpp"
#include "nmres/interior.hpp"

namespace nmres {

std::vector<OracleCase> check_identity(const std::string& tag, int trials,
                                       std::uint64_t seed, const Params& p) {
    const Identity& id = find_identity(tag);
    Rng rng(seed);
    std::vector<OracleCase> cases;
    cases.reserve(trials);
    for (int t = 0; t < trials; ++t) cases.push_back(id.run(rng, p));
    return cases;
}

Functional parse_functional(const std::string& name) {
    if (name == "torsion") return Functional::Torsion;
    if (name == "one-form") return Functional::OneForm;
    if (name == "boundary") return Functional::Boundary;
    if (name == "sanity") return Functional::Sanity;
    throw UnknownFunctional("unknown functional '" + name + "'");
}

SphereValue full_pipeline_numeric(const GaussRat& a, const GaussRat& b, Functional f) {
    Params p = Params::numeric(a, b);
    switch (f) {
        case Functional::Torsion:
            return SphereValue{spectral_torsion(p).coeffs.k1, 2};
        case Functional::OneForm:
            return SphereValue{spectral_one_form(p).k, 2};
        case Functional::Boundary:
            return SphereValue{boundary_torsion(p).density.ku, 2};
        case Functional::Sanity:
            return sanity_value(p);
    }
    throw UnknownFunctional("unhandled functional");
}

}  // namespace nmres
