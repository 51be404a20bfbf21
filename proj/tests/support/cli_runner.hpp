// Runs the mdm executable in a scratch directory and captures its output.
#ifndef MDM_TESTS_CLI_RUNNER_HPP_INCLUDED
#define MDM_TESTS_CLI_RUNNER_HPP_INCLUDED

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <mdm/store.hpp>

namespace mdm::testing
{
struct CliResult
{
    int         code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s)
{
    std::string q = "'";
    for (char c : s)
        q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

class CliSandbox
{
public:
    explicit CliSandbox(const std::string& tag)
    {
        root_ = std::filesystem::temp_directory_path() / ("mdm-cli-" + tag + "-" + std::to_string(::getpid()));
        std::filesystem::remove_all(root_);
        std::filesystem::create_directories(root_);
    }
    ~CliSandbox()
    {
        std::filesystem::remove_all(root_);
    }

    std::filesystem::path path(const std::string& name) const
    {
        return root_ / name;
    }

    std::string store() const
    {
        return path("store").string();
    }

    /// Runs `mdm --store <sandbox store> args...`.
    CliResult run(const std::vector<std::string>& args) const
    {
        return run_raw(std::vector<std::string>{"--store", store()}, args);
    }

    CliResult run_raw(std::vector<std::string> prefix, const std::vector<std::string>& args) const
    {
        std::string cmd = shell_quote(MDM_CLI_PATH);
        prefix.insert(prefix.end(), args.begin(), args.end());
        for (const auto& a : prefix)
            cmd += ' ' + shell_quote(a);
        auto out = path("stdout.txt"), err = path("stderr.txt");
        cmd += " >" + shell_quote(out.string()) + " 2>" + shell_quote(err.string());
        int       status = std::system(cmd.c_str());
        CliResult r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out  = read_file(out);
        r.err  = read_file(err);
        return r;
    }

private:
    std::filesystem::path root_;
};
} // namespace mdm::testing

#endif // MDM_TESTS_CLI_RUNNER_HPP_INCLUDED
