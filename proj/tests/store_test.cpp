#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include <mdm/store.hpp>
#include <support/fixtures.hpp>

using namespace mdm;
using namespace mdm::testing;

namespace
{
class TempDir
{
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() / ("mdm-store-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir()
    {
        fs::remove_all(path_);
    }
    const fs::path& path() const
    {
        return path_;
    }

private:
    static inline int counter_ = 0;
    fs::path          path_;
};
} // namespace

TEST(Store, SaveLoadRoundTrip)
{
    TempDir dir;
    auto    g    = fix_a();
    auto    file = dir.path() / "graph.nt";
    save_store(g, file);
    EXPECT_EQ(load_store(file), g);

    auto first = read_file(file);
    save_store(g, file);
    EXPECT_EQ(read_file(file), first);
    EXPECT_EQ(first, read_golden("fix_a.nt"));
}

TEST(Store, RandomGraphsRoundTrip)
{
    TempDir      dir;
    std::mt19937 rng(23);
    for (int round = 0; round < 20; ++round)
    {
        Graph g(random_statements(rng));
        save_store(g, dir.path() / "g.nt");
        EXPECT_EQ(load_store(dir.path() / "g.nt"), g);
    }
}

TEST(Store, Errors)
{
    TempDir dir;
    EXPECT_THROW(load_store(dir.path() / "missing.nt"), IoError);

    std::ofstream(dir.path() / "bad.nt") << "gen:a dc:title \"x\" .\n\ngen:a dc:title x .\n";
    try
    {
        load_store(dir.path() / "bad.nt");
        FAIL();
    }
    catch (const SyntaxError& e)
    {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(save_store(Graph(), dir.path() / "no-such-dir" / "g.nt"), IoError);
}

TEST(StoreDirectory, InitLoadAndLog)
{
    TempDir        dir;
    StoreDirectory store(dir.path() / "s");
    EXPECT_FALSE(store.initialized());
    EXPECT_THROW(store.load_graph(), IoError);
    EXPECT_TRUE(store.init());
    EXPECT_FALSE(store.init());
    EXPECT_TRUE(store.load_graph().empty());
    EXPECT_EQ(store.load_log().size(), 0u);

    LogEntry e{ResourceId("gen:mf1"), parse_timestamp("2004-08-18T00:00:00Z"), Outcome::success, std::string("ok")};
    store.append_log(e);
    store.append_log(e);
    auto log = store.load_log();
    ASSERT_EQ(log.size(), 2u);
    EXPECT_EQ(log.entries()[1], e);
}

TEST(StoreDirectory, LockIsExclusive)
{
    TempDir        dir;
    StoreDirectory store(dir.path() / "s");
    store.init();
    {
        auto held = store.lock();
        EXPECT_THROW(store.lock(), IoError);
    }
    EXPECT_NO_THROW(store.lock());
}
