#include "clusterbn/generate.hpp"

#include <set>
#include <utility>
#include <vector>

namespace clusterbn {

Configuration random_configuration(std::mt19937_64& rng, std::size_t n, SurfaceModel surface,
                                   const GeneratorOptions& options) {
    std::vector<PointSpec> specs{{1, {}}};
    std::set<std::pair<PointId, PointId>> used_satellites;
    std::bernoulli_distribution new_origin(options.single_origin ? 0.0 : options.origin_probability);
    std::bernoulli_distribution make_satellite(options.satellite_probability);
    std::bernoulli_distribution extend_chain(options.chain_probability);

    for (std::size_t k = 2; k <= n; ++k) {
        const auto id = static_cast<PointId>(k);
        if (new_origin(rng)) {
            specs.push_back({id, {}});
            continue;
        }
        std::uniform_int_distribution<PointId> pick(1, id - 1);
        const PointId parent = extend_chain(rng) ? id - 1 : pick(rng);
        PointSpec spec{id, {parent}};
        if (make_satellite(rng)) {
            std::vector<PointId> open;
            for (PointId target : specs[parent - 1].proximities)
                if (!used_satellites.contains({parent, target})) open.push_back(target);
            if (!open.empty()) {
                std::uniform_int_distribution<std::size_t> choose(0, open.size() - 1);
                const PointId second = open[choose(rng)];
                used_satellites.emplace(parent, second);
                spec.proximities.push_back(second);
            }
        }
        specs.push_back(std::move(spec));
    }
    return build_configuration(specs, surface);
}

}  // namespace clusterbn
