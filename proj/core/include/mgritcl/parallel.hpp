#pragma once

#include <functional>

namespace mgritcl {

// Runs body(0), ..., body(count - 1) on up to `parallelism` threads using a
// static block partition. Iterations must not share mutable state. If any
// iteration throws, the exception of the lowest-numbered failing block is
// rethrown after all threads join.
void parallel_for(int count, int parallelism, const std::function<void(int)>& body);

} // namespace mgritcl
