#ifndef SEASHELL_THREADS_HPP
#define SEASHELL_THREADS_HPP

namespace seashell {

// Number of worker threads to actually use: `requested` if positive, otherwise
// the OpenMP default, in both cases capped by the SEASHELL_THREADS environment
// variable when it is set to a positive integer. Always >= 1.
int effective_threads(int requested = 0);

} // namespace seashell

#endif
