#ifndef RANKGF_CHECKPOINT_HPP
#define RANKGF_CHECKPOINT_HPP

#include <filesystem>
#include <optional>

#include "rankgf/partition.hpp"

namespace rankgf {

// Checkpoint files hold a single line:
//
//   last_completed = 10,9,9,9,9,9
//
// and are replaced atomically (temporary file, then rename).

void write_checkpoint(const std::filesystem::path& path, const Partition& last_completed);

/// nullopt when the file does not exist; throws std::runtime_error when it
/// cannot be read or does not parse.
std::optional<Partition> read_checkpoint(const std::filesystem::path& path);

} // namespace rankgf

#endif
