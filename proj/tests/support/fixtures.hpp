// Shared test fixtures and brute-force oracles. Nothing here calls the query or
// calendar code it is used to check.
#ifndef MDM_TESTS_FIXTURES_HPP_INCLUDED
#define MDM_TESTS_FIXTURES_HPP_INCLUDED

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <mdm/mdm.hpp>

namespace mdm::testing
{
inline std::string golden_path(const std::string& name)
{
    return std::string(MDM_TEST_DATA_DIR) + "/golden/" + name;
}

inline std::string read_golden(const std::string& name)
{
    std::ifstream      in(golden_path(name), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Content collection -> catalog -> schema -> scheme, and one fully described function.
inline Graph fix_a()
{
    return Graph(parse_triples_strict(read_golden("fix_a.nt")));
}

inline Statement st(const std::string& s, const std::string& p, const std::string& o)
{
    return Statement{ResourceId(s), ResourceId(p), ResourceId(o)};
}

inline Statement st_lit(const std::string& s, const std::string& p, const std::string& text)
{
    return Statement{ResourceId(s), ResourceId(p), Literal(text)};
}

// --- random graphs ---------------------------------------------------------

inline const std::vector<std::string>& random_predicates()
{
    static const std::vector<std::string> p = {
        "dc:type",           "cld:collectionDescription", "mdm:hasSchema",       "mdm:followsScheme",
        "mdm:maintenanceFunction", "mdm:maintPeriodicity", "dcterms:isReferencedBy", "mdm:isEngagedVia",
        "mdm:administrator", "mdm:contact",               "dc:title",            "dcterms:accrualPeriodicity",
    };
    return p;
}

inline const std::vector<std::string>& random_type_objects()
{
    static const std::vector<std::string> t = {
        "cldtype:Catalogue", "cldtype:CollectionImage", "mdm:Storage", "mdm:Legacy", "mdm:Accrual",
        "mdm:Export",        "mdm:Monthly",             "mdm:Daily",   "mdm:Bogus",
    };
    return t;
}

inline const std::vector<std::string>& random_literals()
{
    static const std::vector<std::string> l = {
        "DCMES", "MODS", "Monthly", "a \"quoted\" value", "back\\slash", "two\nlines", "tab\there", "caf\xC3\xA9", "",
        "#not a comment", " . ",
    };
    return l;
}

/// Up to `max_statements` statements over a small vocabulary so that joins and
/// collisions happen often.
inline std::vector<Statement> random_statements(std::mt19937& rng, std::size_t max_statements = 200)
{
    std::uniform_int_distribution<std::size_t> count(0, max_statements);
    std::uniform_int_distribution<int>         node(0, 11);
    std::uniform_int_distribution<int>         kind(0, 2);
    const auto&                                preds = random_predicates();
    const auto&                                types = random_type_objects();
    const auto&                                lits  = random_literals();

    auto pick = [&](const auto& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
    auto res  = [&] { return ResourceId("gen:n" + std::to_string(node(rng))); };

    std::vector<Statement> out;
    std::size_t            n = count(rng);
    for (std::size_t i = 0; i < n; ++i)
    {
        ResourceId subject = res();
        ResourceId pred(pick(preds));
        switch (kind(rng))
        {
        case 0:
            out.push_back({subject, pred, res()});
            break;
        case 1:
            out.push_back({subject, pred, ResourceId(pick(types))});
            break;
        default:
            out.push_back({subject, pred, Literal(pick(lits))});
        }
    }
    return out;
}

// --- scan oracles ----------------------------------------------------------

/// Canonical order spelled out from the rendering: subject, predicate, resource-before-literal, object text.
inline auto oracle_key(const Statement& s)
{
    return std::make_tuple(s.subject.curie(), s.predicate.curie(), s.object.is_literal() ? 1 : 0, s.object.rendered());
}

inline std::vector<Statement> oracle_sorted_unique(std::vector<Statement> v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return oracle_key(a) < oracle_key(b); });
    v.erase(std::unique(v.begin(), v.end(), [](const auto& a, const auto& b) { return oracle_key(a) == oracle_key(b); }),
            v.end());
    return v;
}

inline std::vector<Statement> oracle_match(const std::vector<Statement>& all, const std::optional<ResourceId>& s,
                                           const std::optional<ResourceId>& p, const std::optional<ObjectValue>& o)
{
    std::vector<Statement> out;
    for (const auto& x : all)
        if ((!s || x.subject.curie() == s->curie()) && (!p || x.predicate.curie() == p->curie())
            && (!o || (x.object.is_literal() == o->is_literal() && x.object.rendered() == o->rendered())))
            out.push_back(x);
    return oracle_sorted_unique(out);
}

inline std::vector<ResourceId> oracle_ids(std::vector<ResourceId> v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.curie() < b.curie(); });
    v.erase(std::unique(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.curie() == b.curie(); }), v.end());
    return v;
}

inline std::vector<ResourceId> oracle_catalogs_describing(const std::vector<Statement>& all, const ResourceId& coll)
{
    std::vector<ResourceId> out;
    for (const auto& x : all)
        if (x.subject.curie() == coll.curie() && x.predicate.curie() == "cld:collectionDescription" && x.object.is_resource())
            out.push_back(x.object.resource());
    return oracle_ids(out);
}

inline std::vector<ResourceId> oracle_catalogs_with_schema(const std::vector<Statement>& all, const ObjectValue& schema)
{
    std::vector<ResourceId> out;
    for (const auto& x : all)
        if (x.predicate.curie() == "mdm:hasSchema" && x.object.is_literal() == schema.is_literal()
            && x.object.rendered() == schema.rendered())
            out.push_back(x.subject);
    return oracle_ids(out);
}

/// Nested loop over all statement pairs.
inline std::vector<ResourceId> oracle_catalogs_following_scheme(const std::vector<Statement>& all, const ObjectValue& scheme)
{
    std::vector<ResourceId> out;
    for (const auto& a : all)
        for (const auto& b : all)
            if (a.predicate.curie() == "mdm:hasSchema" && b.predicate.curie() == "mdm:followsScheme"
                && a.object.is_resource() && a.object.resource().curie() == b.subject.curie()
                && b.object.is_literal() == scheme.is_literal() && b.object.rendered() == scheme.rendered())
                out.push_back(a.subject);
    return oracle_ids(out);
}

// --- calendar oracle -------------------------------------------------------

struct CivilDate
{
    int y, m, d;
    friend bool operator==(const CivilDate&, const CivilDate&) = default;
};

inline bool oracle_leap(int y)
{
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

inline int oracle_month_length(int y, int m)
{
    static const int len[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return m == 2 && oracle_leap(y) ? 29 : len[m - 1];
}

inline CivilDate oracle_next_day(CivilDate c)
{
    if (++c.d > oracle_month_length(c.y, c.m))
    {
        c.d = 1;
        if (++c.m > 12)
        {
            c.m = 1;
            ++c.y;
        }
    }
    return c;
}

/// Steps one day at a time: `day_step` days forward, or forward across `month_step` month
/// boundaries and then on to the original day-of-month or the last day of that month.
inline CivilDate oracle_step(CivilDate start, int day_step, int month_step)
{
    CivilDate c = start;
    if (month_step == 0)
    {
        for (int i = 0; i < day_step; ++i)
            c = oracle_next_day(c);
        return c;
    }
    int crossed = 0;
    while (crossed < month_step)
    {
        c = oracle_next_day(c);
        if (c.d == 1)
            ++crossed;
    }
    while (c.d < start.d && oracle_next_day(c).d != 1)
        c = oracle_next_day(c);
    return c;
}

/// Finite-period terms with (days, months) per period.
struct OraclePeriod
{
    const char* term;
    int         days;
    int         months;
};

inline constexpr OraclePeriod oracle_periods[] = {
    {"Daily", 1, 0},      {"Weekly", 7, 0},      {"Biweekly", 14, 0}, {"Monthly", 0, 1},
    {"Quarterly", 0, 3},  {"Semiannual", 0, 6},  {"Annual", 0, 12},   {"Biennial", 0, 24},
};

inline CivilDate to_civil(const Date& d)
{
    return {static_cast<int>(d.year()), static_cast<int>(static_cast<unsigned>(d.month())),
            static_cast<int>(static_cast<unsigned>(d.day()))};
}

inline Date from_civil(const CivilDate& c)
{
    return Date{std::chrono::year(c.y), std::chrono::month(static_cast<unsigned>(c.m)),
                std::chrono::day(static_cast<unsigned>(c.d))};
}

/// Scheduler oracle for one function: restates the due rules directly over the log.
inline NextDue oracle_next_due(const Graph& g, const ExecutionLog& log, const ResourceId& f, const Date& as_of)
{
    std::string term;
    for (const auto& s : g)
        if (s.subject == f && s.predicate.curie() == "mdm:maintPeriodicity" && s.object.is_resource()
            && s.object.resource().prefix() == "mdm" && is_member(VocabId::periodicity, s.object.resource().local()))
        {
            term = std::string(s.object.resource().local());
            break;
        }
    if (term.empty() || term == "Irregular")
        return {DueStatus::never, std::nullopt};
    if (term == "Continuous")
        return {DueStatus::due, std::nullopt};
    std::optional<CivilDate> last;
    for (const auto& e : log.entries())
        if (e.function == f && e.outcome == Outcome::success)
        {
            auto c = to_civil(date_of(e.executed_at));
            if (!last || std::tie(c.y, c.m, c.d) > std::tie(last->y, last->m, last->d))
                last = c;
        }
    if (!last)
        return {DueStatus::due, as_of};
    for (const auto& p : oracle_periods)
        if (term == p.term)
        {
            Date due_on = from_civil(oracle_step(*last, p.days, p.months));
            return {due_on <= as_of ? DueStatus::due : DueStatus::not_due, due_on};
        }
    return {};
}
} // namespace mdm::testing

#endif // MDM_TESTS_FIXTURES_HPP_INCLUDED
