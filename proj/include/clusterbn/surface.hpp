#pragma once

#include <string>

namespace clusterbn {

/// The relatively minimal base surface S0: the projective plane or the
/// Hirzebruch surface F_delta.
class SurfaceModel {
public:
    enum class Kind { ProjectivePlane, Hirzebruch };

    static SurfaceModel plane() noexcept { return SurfaceModel(Kind::ProjectivePlane, 0); }
    /// Throws Error(InvalidDegrees) for delta < 0.
    static SurfaceModel hirzebruch(int delta);

    Kind kind() const noexcept { return kind_; }
    bool is_plane() const noexcept { return kind_ == Kind::ProjectivePlane; }
    bool is_hirzebruch() const noexcept { return kind_ == Kind::Hirzebruch; }
    int delta() const noexcept { return delta_; }
    /// Number of base generators of Pic(S0): 1 for the plane, 2 for F_delta.
    int base_rank() const noexcept { return is_plane() ? 1 : 2; }

    /// `p2` or `f <delta>`, the spelling used by configuration files.
    std::string name() const;

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

private:
    SurfaceModel(Kind kind, int delta) noexcept : kind_(kind), delta_(delta) {}

    Kind kind_;
    int delta_;
};

}  // namespace clusterbn
