#include "clusterbn/surface.hpp"

#include "clusterbn/error.hpp"

namespace clusterbn {

SurfaceModel SurfaceModel::hirzebruch(int delta) {
    if (delta < 0) throw Error(Errc::InvalidDegrees, "Hirzebruch index must be nonnegative, got " + std::to_string(delta));
    return SurfaceModel(Kind::Hirzebruch, delta);
}

std::string SurfaceModel::name() const {
    return is_plane() ? "p2" : "f " + std::to_string(delta_);
}

}  // namespace clusterbn
