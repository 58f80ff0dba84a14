#include "qrecall/ensembles.hpp"

#include "qrecall/compensated.hpp"
#include "qrecall/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace qrecall {

namespace {

constexpr int kMaxDrawAttempts = 100;
constexpr double kDrawNormSqFloor = 1e-24; // norm < 1e-12 counts as degenerate

template <typename DrawEntry>
StateVector normalized_draw(std::size_t n, DrawEntry&& draw) {
    std::vector<double> raw(n);
    for (int attempt = 0; attempt < kMaxDrawAttempts; ++attempt) {
        for (double& x : raw) x = draw();
        if (compensated_sum_squares(raw) >= kDrawNormSqFloor) {
            return normalize(std::move(raw));
        }
    }
    throw DegenerateDraw("100 consecutive draws had norm < 1e-12; generator is broken");
}

// Random unit vector with zero component sum: Gaussian draw projected onto the
// zero-sum hyperplane, then scaled to unit length.
std::vector<double> zero_sum_unit(Rng& rng, std::size_t n) {
    std::vector<double> w(n);
    for (int attempt = 0; attempt < kMaxDrawAttempts; ++attempt) {
        for (double& x : w) x = rng.gaussian();
        const double mean = compensated_total(w) / static_cast<double>(n);
        for (double& x : w) x -= mean;
        const double norm_sq = compensated_sum_squares(w);
        if (norm_sq >= kDrawNormSqFloor) {
            const double scale = 1.0 / std::sqrt(norm_sq);
            for (double& x : w) x *= scale;
            return w;
        }
    }
    throw DegenerateDraw("100 consecutive zero-sum draws collapsed; generator is broken");
}

} // namespace

EnsembleSpec EnsembleSpec::uniform_positive(std::size_t n) {
    return {EnsembleKind::UniformPositive, n, 0.0, std::nullopt, 20};
}

EnsembleSpec EnsembleSpec::uniform_signed(std::size_t n) {
    return {EnsembleKind::UniformSigned, n, 0.0, std::nullopt, 20};
}

EnsembleSpec EnsembleSpec::perturbed_uniform(std::size_t n, double epsilon) {
    return {EnsembleKind::PerturbedUniform, n, epsilon, std::nullopt, 20};
}

EnsembleSpec EnsembleSpec::controlled_variance(std::size_t n, double ratio) {
    return {EnsembleKind::ControlledVariance, n, 0.0, ratio, 20};
}

EnsembleSpec EnsembleSpec::controlled_variance_grid(std::size_t n, int levels) {
    return {EnsembleKind::ControlledVariance, n, 0.0, std::nullopt, levels};
}

void validate(const EnsembleSpec& spec) {
    if (spec.n < 2) {
        throw DimensionTooSmall("ensemble dimension must be >= 2, got " +
                                std::to_string(spec.n));
    }
    switch (spec.kind) {
    case EnsembleKind::UniformPositive:
    case EnsembleKind::UniformSigned:
        return;
    case EnsembleKind::PerturbedUniform:
        if (!(spec.epsilon >= 0.0) || !std::isfinite(spec.epsilon)) {
            throw ConfigError("perturbed_uniform epsilon must be finite and >= 0");
        }
        return;
    case EnsembleKind::ControlledVariance:
        if (spec.ratio) {
            if (!(*spec.ratio >= 0.0 && *spec.ratio <= 1.0)) {
                throw ConfigError("controlled_variance ratio must lie in [0, 1]");
            }
        } else if (spec.ratio_levels < 2) {
            throw ConfigError("controlled_variance needs at least 2 ratio levels");
        }
        return;
    }
    throw ConfigError("unknown ensemble kind");
}

StateVector sample(const EnsembleSpec& spec, Seed seed) {
    validate(spec);
    Rng rng(seed.value);
    const std::size_t n = spec.n;

    switch (spec.kind) {
    case EnsembleKind::UniformPositive:
        return normalized_draw(n, [&] { return rng.unit(); });

    case EnsembleKind::UniformSigned:
        return normalized_draw(n, [&] { return 2.0 * rng.unit() - 1.0; });

    case EnsembleKind::PerturbedUniform: {
        if (spec.epsilon == 0.0) {
            return uniform_state(n); // bit-exact ideal state, no draws
        }
        const double base = 1.0 / std::sqrt(static_cast<double>(n));
        return normalized_draw(n, [&] { return base + spec.epsilon * rng.gaussian(); });
    }

    case EnsembleKind::ControlledVariance: {
        double target;
        if (spec.ratio) {
            target = *spec.ratio;
        } else {
            const int levels = spec.ratio_levels;
            const int level = std::min(levels - 1,
                                       static_cast<int>(rng.unit() * static_cast<double>(levels)));
            target = static_cast<double>(level) / static_cast<double>(levels - 1);
        }
        if (target == 0.0) {
            return uniform_state(n); // the zero-sum term vanishes
        }
        const std::vector<double> w = zero_sum_unit(rng, n);
        const double uniform_amp = 1.0 / std::sqrt(static_cast<double>(n));
        const double keep = std::sqrt(1.0 - target);
        const double inject = std::sqrt(target);
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = keep * uniform_amp + inject * w[i];
        }
        // Unit norm holds by construction: u and w are orthogonal unit vectors.
        return StateVector(std::move(v));
    }
    }
    throw ConfigError("unknown ensemble kind");
}

VarianceProfile variance_profile(const EnsembleSpec& spec, Seed seed, std::size_t m) {
    if (m < 1) {
        throw ConfigError("variance_profile needs at least 1 sample");
    }
    validate(spec);

    std::vector<double> ratios(m);
    CompensatedSum total;
    for (std::size_t i = 0; i < m; ++i) {
        const StateVector sv = sample(spec, Seed{derive_seed(seed, i)});
        ratios[i] = amplitude_variance(sv).ratio;
        total.add(ratios[i]);
    }
    std::sort(ratios.begin(), ratios.end());

    VarianceProfile profile;
    profile.samples = m;
    profile.min = ratios.front();
    profile.max = ratios.back();
    profile.mean = total.value() / static_cast<double>(m);
    for (std::size_t d = 1; d <= 9; ++d) {
        const std::size_t rank = (d * m + 9) / 10; // nearest rank, 1-based
        profile.deciles[d - 1] = ratios[std::min(rank, m) - 1];
    }
    return profile;
}

} // namespace qrecall
