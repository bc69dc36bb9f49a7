#ifndef PAINLEVE_VERIFY_HPP
#define PAINLEVE_VERIFY_HPP

#include "painleve/charts.hpp"
#include "painleve/degeneration.hpp"
#include "painleve/report.hpp"
#include "painleve/weyl.hpp"

namespace painleve {

// True iff the pushed-forward vector field of `map` equals the system's
// vector field at the mapped point, with the sign of dt/dt~ matching the
// map's time action. Exact evaluation at `points` seeded points on the
// constraint plane; Indeterminate when the resampling budget runs out.
Ternary check_symmetry(const BirationalMap& map, const HamiltonianSystem& sys, int points,
                       Rng& rng);

// True iff every component of the vector field written in the chart's
// coordinates is a polynomial in the chart phase variables (coefficients
// rational in t), certified by evaluation-interpolation along random lines
// against `degree_bound`. Throws std::domain_error if the chart fails the
// birational round trip.
bool check_chart(const HamiltonianSystem& sys, const Chart& chart, Rng& rng,
                 int degree_bound = 8, int lines = 3);

// The scheme's transformed system has no negative eps powers and its eps^0
// part equals the target system, exact at `points` seeded points through
// series order `order`. Schemes without eps are checked by exact symbolic
// substitution, no sampling.
bool check_degeneration(const DegenerationScheme& scheme, int points, int order, Rng& rng,
                        std::string* note = nullptr);

// The parameter substitution carries the source constraint functional to
// the target one, identically. Symbolic, no sampling.
bool check_constraint_transport(const DegenerationScheme& scheme);

// The variable substitution preserves dx^dy + dz^dw: Jacobian pairing
// J^T Omega J = Omega at seeded points with eps fixed nonzero.
bool check_symplectic(const DegenerationScheme& scheme, int points, Rng& rng);

// Conjugates the entry's source word through the scheme's substitution and
// checks the printed finite-eps images and parameter action: exactly (in
// Q(eps)) when every printed form is rational, through series order
// `order` when square-root branches are involved.
bool check_subgroup_entry(const DegenerationScheme& scheme, const GeneratorCatalog& source_gens,
                          const GeneratorCatalog& target_gens, const SubgroupEntry& entry,
                          int points, int order, Rng& rng, std::string* note = nullptr);

}  // namespace painleve

#endif
