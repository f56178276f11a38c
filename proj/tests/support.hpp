// Filesystem and process helpers shared by the CLI and acceptance
// suites.
#pragma once

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef __unix__
#include <sys/wait.h>
#include <unistd.h>
#endif

namespace support {

// Scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        const unsigned id = counter.fetch_add(1);
#ifdef __unix__
        const long pid = static_cast<long>(::getpid());
#else
        const long pid = 0;
#endif
        path_ = std::filesystem::temp_directory_path() /
                (tag + "-" + std::to_string(pid) + "-" + std::to_string(id));
        std::filesystem::create_directories(path_);
    }

    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path file(const std::string& name) const {
        return path_ / name;
    }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path,
                       const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("test setup: cannot write " + path.string());
    }
    out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("test setup: cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs a shell command, capturing exit code, stdout and stderr.
inline CommandResult run_command(const std::string& command,
                                 const TempDir& scratch) {
    static std::atomic<unsigned> counter{0};
    const unsigned id = counter.fetch_add(1);
    const auto out_path = scratch.file("cmd-out-" + std::to_string(id));
    const auto err_path = scratch.file("cmd-err-" + std::to_string(id));
    const std::string full = command + " > '" + out_path.string() + "' 2> '" +
                             err_path.string() + "'";
    const int raw = std::system(full.c_str());
    CommandResult result;
#ifdef __unix__
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
#else
    result.exit_code = raw;
#endif
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    return result;
}

inline std::string quoted(const std::filesystem::path& path) {
    return "'" + path.string() + "'";
}

}  // namespace support
