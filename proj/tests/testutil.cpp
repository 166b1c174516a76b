#include "testutil.hpp"

#include <stdexcept>

#include "oqho/asymptotics.hpp"
#include "oqho/errors.hpp"

namespace oqho::test {

OscillatorModel random_stable_oscillator(std::mt19937_64& gen, std::size_t n, std::size_t m,
                                         double epsilon) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        RealMatrix r = random_spd(gen, n, 1.0);
        RealMatrix shape = random_matrix(gen, m, n);
        OscillatorModel model;
        try {
            model = OscillatorModel::make_coupled(canonical_theta(n), std::move(r),
                                                  std::move(shape), epsilon);
            auto spectral = spectral_structure(model);
            auto mus = compute_mus(spectral, model.coupling->shape, model.J);
            if (!stability_verdict(mus).stable) continue;
            auto ss = build_state_space(model);
            if (!linalg::is_hurwitz(ss.A)) continue;
            // keep the decay visible inside the search horizon (10 periods)
            if (linalg::max_real_eigenvalue(ss.A) * 10.0 * spectral.period > -1.5) continue;
            return model;
        } catch (const Error&) {
            continue;
        }
    }
    throw std::runtime_error("random_stable_oscillator: no admissible draw after 200 attempts");
}

OscillatorModel two_mode_model(double epsilon) {
    const RealMatrix r{{1.3522, 1.2976, -0.5225, -2.7819},
                       {1.2976, 6.0400, 1.1741, -1.4901},
                       {-0.5225, 1.1741, 2.2582, 1.5566},
                       {-2.7819, -1.4901, 1.5566, 6.7739}};
    const RealMatrix shape{{-1.7423, -1.6364, -0.3020, -0.3483},
                           {0.2053, 0.0173, 1.8136, 1.4126},
                           {1.1929, 0.8284, 0.9149, 1.5024},
                           {-0.8028, 0.2177, -0.0571, 0.7304},
                           {-1.2656, -1.9092, 1.3094, 0.4908},
                           {-0.1493, -0.5368, -1.0447, -0.5861}};
    return OscillatorModel::make_coupled(canonical_theta(4), r, shape, epsilon);
}

}  // namespace oqho::test
