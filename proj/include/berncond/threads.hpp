#pragma once

namespace berncond {

// Worker cap for OpenMP regions. Resolution order: BERNCOND_THREADS env var
// (values < 1 mean "serial"), then the OpenMP default. Returns 1 when built
// without OpenMP.
int maxThreads();

// Applies the cap process-wide (called once by the CLI; tests call it to pin
// thread counts).
void setThreadCount(int n);

}  // namespace berncond
