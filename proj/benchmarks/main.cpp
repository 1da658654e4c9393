#include <benchmark/benchmark.h>

// The distro benchmark_main archive is LTO bytecode from another compiler build, so main lives here.
BENCHMARK_MAIN();
