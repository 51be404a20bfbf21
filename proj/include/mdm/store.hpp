#ifndef MDM_STORE_HPP_INCLUDED
#define MDM_STORE_HPP_INCLUDED

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <mdm/error.hpp>
#include <mdm/graph.hpp>
#include <mdm/interchange.hpp>
#include <mdm/maintenance.hpp>

namespace mdm
{
namespace fs = std::filesystem;

inline std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open for reading", path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("read failed", path.string());
    return buf.str();
}

/// Replaces `path` with `contents` through a temporary file and rename.
inline void write_file_atomic(const fs::path& path, std::string_view contents)
{
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open for writing", tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out)
            throw IoError("write failed", tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec)
        throw IoError("cannot replace: " + ec.message(), path.string());
}

/// Throws IoError, or SyntaxError carrying the line number of the first bad line.
inline Graph load_store(const fs::path& path)
{
    auto text = read_file(path);
    try
    {
        return Graph(parse_triples_strict(text));
    }
    catch (const SyntaxError& e)
    {
        throw SyntaxError(path.string() + ": " + e.message(), e.line());
    }
}

inline void save_store(const Graph& g, const fs::path& path)
{
    write_file_atomic(path, serialize_canonical(g));
}

/// Exclusive advisory lock held for the lifetime of the object.
class StoreLock
{
public:
    explicit StoreLock(const fs::path& path) : path_(path.string())
    {
        fd_ = ::open(path_.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
        if (fd_ < 0)
            throw IoError(std::string("cannot open lock file: ") + std::strerror(errno), path_);
        if (::flock(fd_, LOCK_EX | LOCK_NB) != 0)
        {
            int err = errno;
            ::close(fd_);
            throw IoError(err == EWOULDBLOCK ? "store is locked by another process"
                                             : std::string("cannot lock: ") + std::strerror(err),
                          path_);
        }
    }

    StoreLock(const StoreLock&)            = delete;
    StoreLock& operator=(const StoreLock&) = delete;

    ~StoreLock()
    {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }

private:
    std::string path_;
    int         fd_ = -1;
};

/// A store directory: `graph.nt`, `maintenance.log` and the lock file `graph.nt.lock`.
class StoreDirectory
{
public:
    explicit StoreDirectory(fs::path root) : root_(std::move(root)) {}

    const fs::path& root() const noexcept
    {
        return root_;
    }
    fs::path graph_path() const
    {
        return root_ / "graph.nt";
    }
    fs::path log_path() const
    {
        return root_ / "maintenance.log";
    }
    fs::path lock_path() const
    {
        return root_ / "graph.nt.lock";
    }

    bool initialized() const
    {
        return fs::is_regular_file(graph_path());
    }

    /// Creates the directory and empty files. Returns false if the store already existed.
    bool init() const
    {
        if (initialized())
            return false;
        std::error_code ec;
        fs::create_directories(root_, ec);
        if (ec)
            throw IoError("cannot create store directory: " + ec.message(), root_.string());
        write_file_atomic(graph_path(), "");
        if (!fs::exists(log_path()))
            write_file_atomic(log_path(), "");
        return true;
    }

    void require_initialized() const
    {
        if (!initialized())
            throw IoError("not an initialized store (run init)", root_.string());
    }

    StoreLock lock() const
    {
        require_initialized();
        return StoreLock(lock_path());
    }

    Graph load_graph() const
    {
        require_initialized();
        return load_store(graph_path());
    }

    void save_graph(const Graph& g) const
    {
        save_store(g, graph_path());
    }

    ExecutionLog load_log() const
    {
        if (!fs::exists(log_path()))
            return {};
        try
        {
            return parse_log(read_file(log_path()));
        }
        catch (const SyntaxError& e)
        {
            throw SyntaxError(log_path().string() + ": " + e.message(), e.line());
        }
    }

    void append_log(const LogEntry& entry) const
    {
        std::ofstream out(log_path(), std::ios::binary | std::ios::app);
        if (!out)
            throw IoError("cannot open for appending", log_path().string());
        out << format_log_line(entry) << '\n';
        if (!out)
            throw IoError("append failed", log_path().string());
    }

private:
    fs::path root_;
};
} // namespace mdm

#endif // MDM_STORE_HPP_INCLUDED
