#ifndef MDM_MAINTENANCE_HPP_INCLUDED
#define MDM_MAINTENANCE_HPP_INCLUDED

#include <array>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <mdm/error.hpp>
#include <mdm/graph.hpp>
#include <mdm/vocabulary.hpp>

namespace mdm
{
using Date      = std::chrono::year_month_day;
using Timestamp = std::chrono::sys_seconds;

namespace detail
{
    // Reads exactly `width` decimal digits starting at `pos`.
    inline std::optional<int> fixed_digits(std::string_view s, std::size_t pos, std::size_t width)
    {
        if (pos + width > s.size())
            return std::nullopt;
        int value = 0;
        for (std::size_t i = pos; i < pos + width; ++i)
        {
            if (s[i] < '0' || s[i] > '9')
                return std::nullopt;
            value = value * 10 + (s[i] - '0');
        }
        return value;
    }

    inline std::optional<Date> parse_date_prefix(std::string_view s)
    {
        auto y = fixed_digits(s, 0, 4);
        auto m = fixed_digits(s, 5, 2);
        auto d = fixed_digits(s, 8, 2);
        if (!y || !m || !d || s.size() < 10 || s[4] != '-' || s[7] != '-')
            return std::nullopt;
        Date date{std::chrono::year(*y), std::chrono::month(static_cast<unsigned>(*m)),
                  std::chrono::day(static_cast<unsigned>(*d))};
        if (!date.ok())
            return std::nullopt;
        return date;
    }
} // namespace detail

/// Parses `YYYY-MM-DD`; throws SyntaxError.
inline Date parse_date(std::string_view text)
{
    auto date = detail::parse_date_prefix(text);
    if (!date || text.size() != 10)
        throw SyntaxError("invalid date (expected YYYY-MM-DD): " + std::string(text));
    return *date;
}

inline std::string format_date(const Date& d)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                  static_cast<unsigned>(d.day()));
    return buf;
}

/// Parses a UTC instant written `YYYY-MM-DDTHH:MM:SSZ`; throws SyntaxError.
inline Timestamp parse_timestamp(std::string_view text)
{
    using namespace std::chrono;
    auto fail = [&] { return SyntaxError("invalid UTC timestamp (expected YYYY-MM-DDTHH:MM:SSZ): " + std::string(text)); };
    if (text.size() != 20 || text[10] != 'T' || text[13] != ':' || text[16] != ':' || text[19] != 'Z')
        throw fail();
    auto date = detail::parse_date_prefix(text);
    auto hh   = detail::fixed_digits(text, 11, 2);
    auto mm   = detail::fixed_digits(text, 14, 2);
    auto ss   = detail::fixed_digits(text, 17, 2);
    if (!date || !hh || !mm || !ss || *hh > 23 || *mm > 59 || *ss > 59)
        throw fail();
    return sys_days(*date) + hours(*hh) + minutes(*mm) + seconds(*ss);
}

inline std::string format_timestamp(Timestamp t)
{
    using namespace std::chrono;
    auto day  = floor<days>(t);
    auto time = hh_mm_ss<seconds>(t - day);
    char buf[16];
    std::snprintf(buf, sizeof buf, "T%02d:%02d:%02dZ", static_cast<int>(time.hours().count()),
                  static_cast<int>(time.minutes().count()), static_cast<int>(time.seconds().count()));
    return format_date(Date(day)) + buf;
}

inline Date date_of(Timestamp t)
{
    return Date(std::chrono::floor<std::chrono::days>(t));
}

inline Date today_utc()
{
    return date_of(std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));
}

/// A calendar date, or one of the markers for periodicities without a next date.
struct Occurrence
{
    enum class Kind
    {
        date,
        always,
        never,
    };

    Kind kind = Kind::never;
    Date date{};

    static Occurrence on(Date d)
    {
        return {Kind::date, d};
    }
    static Occurrence always()
    {
        return {Kind::always, {}};
    }
    static Occurrence never()
    {
        return {Kind::never, {}};
    }

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

namespace detail
{
    inline Date clamp_to_month(std::chrono::year_month_day ymd)
    {
        if (ymd.ok())
            return ymd;
        return Date(std::chrono::year_month_day_last(ymd.year(), std::chrono::month_day_last(ymd.month())));
    }
} // namespace detail

/// Advances `date` by one period of an MDMPeriodicity term.
///
/// Day-based terms add 7 or 14 days (Daily adds 1). Month- and year-based terms step the
/// calendar and clamp the day to the last day of the target month.
inline Occurrence add_period(const Date& date, std::string_view term)
{
    using namespace std::chrono;
    if (!is_member(VocabId::periodicity, term))
        throw VocabularyError("not an MDMPeriodicity term: " + std::string(term));

    if (term == "Continuous")
        return Occurrence::always();
    if (term == "Irregular")
        return Occurrence::never();
    if (term == "Daily")
        return Occurrence::on(Date(sys_days(date) + days(1)));
    if (term == "Weekly")
        return Occurrence::on(Date(sys_days(date) + days(7)));
    if (term == "Biweekly")
        return Occurrence::on(Date(sys_days(date) + days(14)));
    if (term == "Monthly")
        return Occurrence::on(detail::clamp_to_month(date + months(1)));
    if (term == "Quarterly")
        return Occurrence::on(detail::clamp_to_month(date + months(3)));
    if (term == "Semiannual")
        return Occurrence::on(detail::clamp_to_month(date + months(6)));
    if (term == "Annual")
        return Occurrence::on(detail::clamp_to_month(date + years(1)));
    // Biennial
    return Occurrence::on(detail::clamp_to_month(date + years(2)));
}

enum class Outcome
{
    success,
    failure,
};

inline std::string_view to_string(Outcome o) noexcept
{
    return o == Outcome::success ? "success" : "failure";
}

inline Outcome parse_outcome(std::string_view text)
{
    if (text == "success")
        return Outcome::success;
    if (text == "failure")
        return Outcome::failure;
    throw SyntaxError("invalid outcome (expected success or failure): " + std::string(text));
}

struct LogEntry
{
    ResourceId                 function;
    Timestamp                  executed_at;
    Outcome                    outcome;
    std::optional<std::string> note;

    friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

/// Append-only list of execution records, in insertion order.
class ExecutionLog
{
public:
    void record(LogEntry entry)
    {
        entries_.push_back(std::move(entry));
    }

    const std::vector<LogEntry>& entries() const noexcept
    {
        return entries_;
    }
    std::size_t size() const noexcept
    {
        return entries_.size();
    }

    /// Latest successful execution of `function`, if any.
    std::optional<Timestamp> last_success(const ResourceId& function) const
    {
        std::optional<Timestamp> latest;
        for (const auto& e : entries_)
            if (e.outcome == Outcome::success && e.function == function && (!latest || e.executed_at > *latest))
                latest = e.executed_at;
        return latest;
    }

    friend bool operator==(const ExecutionLog&, const ExecutionLog&) = default;

private:
    std::vector<LogEntry> entries_;
};

inline ExecutionLog record_execution(ExecutionLog log, LogEntry entry)
{
    log.record(std::move(entry));
    return log;
}

namespace detail
{
    inline std::string escape_note(std::string_view note)
    {
        std::string out;
        for (char c : note)
        {
            switch (c)
            {
            case '\t':
                out += "\\t";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\\':
                out += "\\\\";
                break;
            default:
                out += c;
            }
        }
        return out;
    }

    inline std::string unescape_note(std::string_view text)
    {
        std::string out;
        for (std::size_t i = 0; i < text.size(); ++i)
        {
            if (text[i] != '\\')
            {
                out += text[i];
                continue;
            }
            if (++i == text.size())
                throw SyntaxError("dangling backslash in note");
            switch (text[i])
            {
            case 't':
                out += '\t';
                break;
            case 'n':
                out += '\n';
                break;
            case '\\':
                out += '\\';
                break;
            default:
                throw SyntaxError(std::string("bad escape \\") + text[i] + " in note");
            }
        }
        return out;
    }
} // namespace detail

/// One log line without its terminating LF: `function TAB timestamp TAB outcome [TAB note]`.
inline std::string format_log_line(const LogEntry& e)
{
    std::string line = e.function.curie() + '\t' + format_timestamp(e.executed_at) + '\t' + std::string(to_string(e.outcome));
    if (e.note)
        line += '\t' + detail::escape_note(*e.note);
    return line;
}

inline LogEntry parse_log_line(std::string_view line)
{
    std::vector<std::string_view> fields;
    for (std::size_t pos = 0;;)
    {
        auto tab = line.find('\t', pos);
        fields.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
        if (tab == std::string_view::npos)
            break;
        pos = tab + 1;
    }
    if (fields.size() < 3 || fields.size() > 4)
        throw SyntaxError("expected 3 or 4 tab-separated fields, found " + std::to_string(fields.size()));
    LogEntry e{ResourceId(std::string(fields[0])), parse_timestamp(fields[1]), parse_outcome(fields[2]), std::nullopt};
    if (fields.size() == 4)
        e.note = detail::unescape_note(fields[3]);
    return e;
}

/// Parses a whole log file; blank lines are skipped. Throws SyntaxError with the line number.
inline ExecutionLog parse_log(std::string_view text)
{
    ExecutionLog log;
    std::size_t  line_no = 0;
    for (std::size_t pos = 0; pos < text.size();)
    {
        auto eol  = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos       = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (line.empty())
            continue;
        try
        {
            log.record(parse_log_line(line));
        }
        catch (const SyntaxError& e)
        {
            throw SyntaxError(e.message(), line_no);
        }
    }
    return log;
}

inline std::string serialize_log(const ExecutionLog& log)
{
    std::string out;
    for (const auto& e : log.entries())
        out += format_log_line(e) + '\n';
    return out;
}

enum class DueStatus
{
    due,
    not_due,
    never,
};

/// Scheduler answer for one function. A `due` result without `due_on` means always due.
/// For `not_due`, `due_on` is the upcoming date.
struct NextDue
{
    DueStatus           status = DueStatus::never;
    std::optional<Date> due_on;

    bool always() const noexcept
    {
        return status == DueStatus::due && !due_on;
    }

    friend bool operator==(const NextDue&, const NextDue&) = default;
};

/// The function's first MDMPeriodicity term in canonical order, if any.
inline std::optional<std::string> periodicity_of(const Graph& g, const ResourceId& function)
{
    for (const auto& value : g.objects(function, terms::maint_periodicity))
        if (auto term = vocabulary_term(value, VocabId::periodicity))
            return std::string(*term);
    return std::nullopt;
}

inline std::vector<std::string> function_types_of(const Graph& g, const ResourceId& function)
{
    std::vector<std::string> out;
    for (const auto& value : g.objects(function, terms::dc_type))
        if (auto term = vocabulary_term(value, VocabId::function_type))
            out.emplace_back(*term);
    return out;
}

/// When `function` should next run, given its periodicity and the latest successful run.
/// Functions that never succeeded are due on `as_of`. Throws NotFoundError if the graph
/// does not mention `function`.
inline NextDue next_due(const Graph& g, const ExecutionLog& log, const ResourceId& function, const Date& as_of)
{
    if (!g.mentions(function))
        throw NotFoundError("function not found in graph: " + function.curie());

    auto term = periodicity_of(g, function);
    if (!term || *term == "Irregular")
        return {DueStatus::never, std::nullopt};
    if (*term == "Continuous")
        return {DueStatus::due, std::nullopt};

    auto last = log.last_success(function);
    if (!last)
        return {DueStatus::due, as_of};

    Date due_on = add_period(date_of(*last), *term).date;
    return {due_on <= as_of ? DueStatus::due : DueStatus::not_due, due_on};
}

struct DueItem
{
    ResourceId               function;
    ResourceId               catalog;
    std::vector<std::string> function_types;
    std::optional<Date>      due_on; // nullopt: always due

    friend bool operator==(const DueItem&, const DueItem&) = default;
};

/// Every (catalog, function) link whose function is due at `as_of`, ordered by catalog then function.
inline std::vector<DueItem> due_functions(const Graph& g, const ExecutionLog& log, const Date& as_of)
{
    std::vector<DueItem> out;
    for (const auto& s : g.statements_matching({std::nullopt, terms::maintenance_function, std::nullopt}))
    {
        const auto* function = s.object.as_resource();
        if (function == nullptr)
            continue;
        auto next = next_due(g, log, *function, as_of);
        if (next.status == DueStatus::due)
            out.push_back({*function, s.subject, function_types_of(g, *function), next.due_on});
    }
    return out;
}

enum class MatrixColumn
{
    periodicity,
    documentation,
    script_service,
    department,
    contact,
};

inline constexpr std::size_t matrix_columns = 5;

inline constexpr std::array<std::string_view, matrix_columns> matrix_column_names = {
    "Periodicity", "Documentation", "Script/Service", "Department", "Contact"};

inline const ResourceId& matrix_column_property(MatrixColumn c)
{
    switch (c)
    {
    case MatrixColumn::periodicity:
        return terms::maint_periodicity;
    case MatrixColumn::documentation:
        return terms::is_referenced_by;
    case MatrixColumn::script_service:
        return terms::is_engaged_via;
    case MatrixColumn::department:
        return terms::administrator;
    case MatrixColumn::contact:
        break;
    }
    return terms::contact;
}

struct MatrixRow
{
    ObjectValue                                         function;
    std::vector<std::string>                            function_types;
    std::array<std::vector<ObjectValue>, matrix_columns> cells;

    std::size_t filled() const noexcept
    {
        std::size_t n = 0;
        for (const auto& c : cells)
            n += c.empty() ? 0 : 1;
        return n;
    }
};

/// Per-catalog coverage grid: one row per linked maintenance function.
struct Matrix
{
    ResourceId             catalog;
    std::vector<MatrixRow> rows;
    double                 completeness = 1.0; // filled cells / (5 * rows); 1.0 when there are no rows
};

/// Throws NotACatalogError unless `catalog` has dc:type cldtype:Catalogue.
inline Matrix zachman_matrix(const Graph& g, const ResourceId& catalog)
{
    if (!g.has_type(catalog, terms::cldtype_catalogue))
        throw NotACatalogError(catalog.curie() + " is not typed cldtype:Catalogue");

    Matrix      m{catalog, {}, 1.0};
    std::size_t filled = 0;
    for (const auto& function : g.objects(catalog, terms::maintenance_function))
    {
        MatrixRow row{function, {}, {}};
        if (const auto* id = function.as_resource())
        {
            row.function_types = function_types_of(g, *id);
            for (std::size_t c = 0; c < matrix_columns; ++c)
                row.cells[c] = g.objects(*id, matrix_column_property(static_cast<MatrixColumn>(c)));
        }
        filled += row.filled();
        m.rows.push_back(std::move(row));
    }
    if (!m.rows.empty())
        m.completeness = static_cast<double>(filled) / static_cast<double>(matrix_columns * m.rows.size());
    return m;
}
} // namespace mdm

#endif // MDM_MAINTENANCE_HPP_INCLUDED
