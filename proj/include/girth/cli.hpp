#pragma once

namespace girth {
namespace cli {
int run(int argc, char** argv);
}  // namespace cli
}  // namespace girth

// Placeholder until the full CLI lands; keeps the binary linking.
inline int girth::cli::run(int, char**) { return 2; }
