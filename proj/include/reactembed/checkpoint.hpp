#pragma once

#include "reactembed/projection_net.hpp"

#include <filesystem>

namespace reactembed {

/// The pair of projection nets, protein-side first.
struct Checkpoint {
    ProjectionNet p2u;
    ProjectionNet m2u;
};

/// Single binary file: magic + format version + per-net dimension chains,
/// then parameters as little-endian 64-bit floats, weights row-major then
/// bias per layer, p2u before m2u. Written to a temp file and renamed so a
/// partial checkpoint is never left behind.
void save_checkpoint(const Checkpoint& ck, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace reactembed
