#pragma once

#include "cr/classify.hpp"
#include "cr/kernel.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cr {

inline constexpr std::uint64_t kDefaultSeeds[2] = {7919, 104729};

// Rational sampler for "generic" parameters: numerators in [-97, 97], denominators in [1, 97].
class ParamSampler {
public:
    explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}
    Rat rat();
    Rat positive_rat();
    GaussRat gauss();

private:
    std::mt19937_64 rng_;
};

J6Params generic_j6_params(std::uint64_t seed);
// Generic admissible (k, m) for the class and a generic R.
TwoNondegParams generic_pair_params(int pair_id, std::uint64_t seed);

struct Fixture {
    std::string name;
    ModelSurface surface;
    JetShape shape;
    std::optional<std::uint64_t> seed;
    std::string default_space;
};

std::vector<std::string> fixture_names();
bool fixture_uses_seed(const std::string& name);
// Throws std::invalid_argument for unknown names.
Fixture make_fixture(const std::string& name, std::uint64_t seed = kDefaultSeeds[0]);

// A named jet space: shape, grading and window on which the operator is materialized.
struct Space {
    std::string name;
    JetShape shape;
    WeightSystem ws;
    Window window;
};

std::vector<std::string> space_names();
// Throws std::invalid_argument when the space does not apply to the fixture.
Space make_space(const Fixture& f, const std::string& name);

// Shape of Ṽ5: the W2 shape with components of weight below (3, 3, 2, 5) removed.
JetShape shape_v5tilde();

// Closed-form kernel family on Ṽ5 for pair 9 with R = r1 z1^2, series-expanded in zeta
// through jet weight `top` under W2.
FieldJet pair9_family(const ModelSurface& s, const GaussRat& r1, const GaussRat& n1, const GaussRat& n2, int top);
// The extra direction g = i t z1^2 / (1 + 2 conj(r1) zeta), t real.
FieldJet pair9_extra_direction(const ModelSurface& s, const GaussRat& r1, const Rat& t, int top);
// Trivial solutions under W2: the dilation field (z1, z2, 0, 2w) and h = real constant.
FieldJet pair_dilation(const ModelSurface& s);
FieldJet pair_h_constant(const ModelSurface& s, const Rat& c);

}  // namespace cr
