#pragma once

#include <functional>

namespace spectraux {

// Worker cap from SPECTRAUX_THREADS; 0, unset or unparsable means one worker
// per hardware thread.
int env_thread_cap();

// Runs body(0..count-1) on up to `workers` threads. Bodies must write only
// to their own index's slot; iteration order is unspecified but the slot
// addressing makes results independent of the worker count.
void parallel_for(int count, int workers, const std::function<void(int)>& body);

}  // namespace spectraux
