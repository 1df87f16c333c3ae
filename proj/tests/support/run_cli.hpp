#pragma once

// Spawns the CLI under test through the shell and captures what it printed.
// The binary path and the data directory arrive through argv, so the same
// test sources work from any build directory.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace clitest {

struct RunResult {
    int code = -1;
    std::string output;
};

// `command` is a full shell command line; append "2>&1" to fold stderr in,
// or "2>/dev/null" to drop it.
inline RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed for: " + command);
    }
    std::array<char, 4096> chunk{};
    std::size_t got = 0;
    while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0) {
        result.output.append(chunk.data(), got);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) {
        result.code = WEXITSTATUS(status);
    }
    return result;
}

}  // namespace clitest
