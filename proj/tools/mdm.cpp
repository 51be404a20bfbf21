// mdm: command-line front end for a metadata maintenance registry store.
//
// Exit codes: 0 success, 1 error findings (validate) or items due (due --fail-if-due),
// 2 usage error, 3 I/O or parse error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <mdm/mdm.hpp>

namespace
{
using nlohmann::json;

constexpr int exit_ok       = 0;
constexpr int exit_findings = 1;
constexpr int exit_usage    = 2;
constexpr int exit_io       = 3;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

mdm::ResourceId resource_arg(const std::string& text, const char* what)
{
    try
    {
        return mdm::ResourceId(text);
    }
    catch (const mdm::SyntaxError& e)
    {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

// Quoted text uses the triple grammar; a well-formed CURIE is a resource; anything else
// is taken as a plain literal.
mdm::ObjectValue object_arg(const std::string& text, const char* what)
{
    try
    {
        if (!text.empty() && text.front() == '"')
            return mdm::parse_object(text);
        if (auto id = mdm::ResourceId::try_parse(text))
            return *id;
        return mdm::Literal(text);
    }
    catch (const mdm::SyntaxError& e)
    {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

mdm::Date date_arg(const std::string& text)
{
    try
    {
        return mdm::parse_date(text);
    }
    catch (const mdm::SyntaxError& e)
    {
        throw UsageError(e.what());
    }
}

void print_json(const json& j)
{
    std::cout << j.dump(2) << '\n';
}

json ids_json(const std::vector<mdm::ResourceId>& ids)
{
    auto out = json::array();
    for (const auto& id : ids)
        out.push_back(id.curie());
    return out;
}

json report_json(const mdm::Report& r)
{
    auto findings = json::array();
    for (const auto& f : r.findings)
        findings.push_back({{"rule", f.rule_id},
                            {"severity", mdm::to_string(f.severity)},
                            {"subject", f.subject.curie()},
                            {"message", f.message}});
    return {{"findings", findings},
            {"counts", {{"error", r.errors}, {"warning", r.warnings}, {"info", r.infos}}}};
}

json due_json(const std::vector<mdm::DueItem>& items)
{
    auto out = json::array();
    for (const auto& item : items)
        out.push_back({{"catalog", item.catalog.curie()},
                       {"function", item.function.curie()},
                       {"function_types", item.function_types},
                       {"due_on", item.due_on ? mdm::format_date(*item.due_on) : std::string("always")}});
    return out;
}

json matrix_json(const mdm::Matrix& m)
{
    auto rows = json::array();
    for (const auto& row : m.rows)
    {
        auto cells = json::object();
        for (std::size_t c = 0; c < mdm::matrix_columns; ++c)
        {
            auto values = json::array();
            for (const auto& v : row.cells[c])
                values.push_back(mdm::to_json(v));
            cells[std::string(mdm::matrix_column_names[c])] = values;
        }
        rows.push_back({{"function", mdm::to_json(row.function)},
                        {"function_types", row.function_types},
                        {"cells", cells}});
    }
    return {{"catalog", m.catalog.curie()}, {"completeness", m.completeness}, {"rows", rows}};
}

std::string join_types(const std::vector<std::string>& types)
{
    std::string out;
    for (const auto& t : types)
        out += (out.empty() ? "" : ",") + t;
    return out.empty() ? "-" : out;
}

struct Cli
{
    std::string store_path = "./mdm-store";
    std::string format     = "text";

    // add / retract
    std::string s, p, o;
    // query
    std::optional<std::string> qs, qp, qo;
    // catalogs
    std::optional<std::string> collection, schema, scheme;
    // log
    std::string                log_function, log_time, log_outcome;
    std::optional<std::string> log_note;
    // due
    std::optional<std::string> as_of;
    bool                       fail_if_due = false;
    // matrix
    std::string catalog;
    // import
    std::string import_file;
    // export
    std::string export_format = "ntriples";
    // vocab
    std::string vocab_id;

    bool json() const
    {
        return format == "json";
    }
};

int run_init(const Cli& cli)
{
    mdm::StoreDirectory store(cli.store_path);
    if (store.init())
        std::cout << "initialized store at " << store.root().string() << '\n';
    else
        std::cout << "store already initialized at " << store.root().string() << '\n';
    return exit_ok;
}

int run_add_retract(const Cli& cli, bool add)
{
    mdm::StoreDirectory store(cli.store_path);
    mdm::Statement      st{resource_arg(cli.s, "subject"), resource_arg(cli.p, "predicate"), object_arg(cli.o, "object")};
    auto                lock  = store.lock();
    auto                graph = store.load_graph();
    bool changed = add ? graph.assert_statement(st) : graph.retract_statement(st);
    if (changed)
        store.save_graph(graph);
    std::cout << (add ? (changed ? "added" : "already present") : (changed ? "retracted" : "not present")) << '\n';
    return exit_ok;
}

int run_query(const Cli& cli)
{
    mdm::StoreDirectory store(cli.store_path);
    mdm::Pattern        pattern;
    if (cli.qs)
        pattern.subject = resource_arg(*cli.qs, "--s");
    if (cli.qp)
        pattern.predicate = resource_arg(*cli.qp, "--p");
    if (cli.qo)
        pattern.object = object_arg(*cli.qo, "--o");
    auto lock    = store.lock();
    auto matches = store.load_graph().statements_matching(pattern);
    if (cli.json())
    {
        auto out = json::array();
        for (const auto& s : matches)
            out.push_back(mdm::to_json(s));
        print_json(out);
    }
    else
        std::cout << mdm::serialize_canonical(matches);
    return exit_ok;
}

int run_catalogs(const Cli& cli)
{
    int given = (cli.collection ? 1 : 0) + (cli.schema ? 1 : 0) + (cli.scheme ? 1 : 0);
    if (given != 1)
        throw UsageError("catalogs: exactly one of --collection, --schema, --scheme is required");
    mdm::StoreDirectory store(cli.store_path);
    auto                lock  = store.lock();
    auto                graph = store.load_graph();

    std::vector<mdm::ResourceId> result;
    if (cli.collection)
        result = mdm::catalogs_describing(graph, resource_arg(*cli.collection, "--collection"));
    else if (cli.schema)
        result = mdm::catalogs_with_schema(graph, object_arg(*cli.schema, "--schema"));
    else
        result = mdm::catalogs_following_scheme(graph, object_arg(*cli.scheme, "--scheme"));

    if (cli.json())
        print_json(ids_json(result));
    else
        for (const auto& id : result)
            std::cout << id.curie() << '\n';
    return exit_ok;
}

int run_validate(const Cli& cli)
{
    mdm::StoreDirectory store(cli.store_path);
    auto                lock   = store.lock();
    auto                report = mdm::validate(store.load_graph());
    if (cli.json())
        print_json(report_json(report));
    else
    {
        for (const auto& f : report.findings)
            std::cout << f.rule_id << ' ' << mdm::to_string(f.severity) << ' ' << f.subject.curie() << ' ' << f.message
                      << '\n';
        std::cout << report.errors << " errors, " << report.warnings << " warnings, " << report.infos << " info\n";
    }
    return report.errors > 0 ? exit_findings : exit_ok;
}

int run_log(const Cli& cli)
{
    mdm::StoreDirectory store(cli.store_path);
    mdm::LogEntry       entry{resource_arg(cli.log_function, "function"), {}, mdm::Outcome::success, cli.log_note};
    try
    {
        entry.executed_at = mdm::parse_timestamp(cli.log_time);
        entry.outcome     = mdm::parse_outcome(cli.log_outcome);
    }
    catch (const mdm::SyntaxError& e)
    {
        throw UsageError(e.what());
    }
    auto lock = store.lock();
    store.append_log(entry);
    std::cout << "recorded " << mdm::format_log_line(entry) << '\n';
    return exit_ok;
}

int run_due(const Cli& cli)
{
    auto                as_of = cli.as_of ? date_arg(*cli.as_of) : mdm::today_utc();
    mdm::StoreDirectory store(cli.store_path);
    auto                lock  = store.lock();
    auto                graph = store.load_graph();
    auto                items = mdm::due_functions(graph, store.load_log(), as_of);
    if (cli.json())
        print_json(due_json(items));
    else if (items.empty())
        std::cout << "nothing due as of " << mdm::format_date(as_of) << '\n';
    else
        for (const auto& item : items)
            std::cout << item.catalog.curie() << '\t' << item.function.curie() << '\t'
                      << (item.due_on ? mdm::format_date(*item.due_on) : std::string("always")) << '\t'
                      << join_types(item.function_types) << '\n';
    return cli.fail_if_due && !items.empty() ? exit_findings : exit_ok;
}

int run_matrix(const Cli& cli)
{
    auto                catalog = resource_arg(cli.catalog, "catalog");
    mdm::StoreDirectory store(cli.store_path);
    auto                lock  = store.lock();
    auto                graph = store.load_graph();
    auto                m     = [&] {
        try
        {
            return mdm::zachman_matrix(graph, catalog);
        }
        catch (const mdm::NotACatalogError& e)
        {
            throw UsageError(e.what());
        }
    }();
    if (m.rows.empty())
        std::cerr << "notice: no maintenance functions registered for " << catalog.curie()
                  << "; completeness reported as 1.0\n";
    if (cli.json())
    {
        print_json(matrix_json(m));
        return exit_ok;
    }
    char completeness[32];
    std::snprintf(completeness, sizeof completeness, "%.3f", m.completeness);
    std::cout << "catalog " << m.catalog.curie() << "  rows " << m.rows.size() << "  completeness " << completeness
              << '\n';
    for (const auto& row : m.rows)
    {
        std::cout << row.function.rendered() << " [" << join_types(row.function_types) << "]\n";
        for (std::size_t c = 0; c < mdm::matrix_columns; ++c)
        {
            std::cout << "  " << mdm::matrix_column_names[c] << ':';
            if (row.cells[c].empty())
                std::cout << " (missing)";
            for (const auto& v : row.cells[c])
                std::cout << ' ' << v.rendered();
            std::cout << '\n';
        }
    }
    return exit_ok;
}

int run_import(const Cli& cli)
{
    mdm::StoreDirectory store(cli.store_path);
    auto                outcome = mdm::parse_triples(mdm::read_file(cli.import_file));
    if (!outcome.ok())
    {
        for (const auto& d : outcome.errors)
            std::cerr << cli.import_file << ':' << d.line << ": " << d.message << '\n';
        return exit_io;
    }
    auto        lock  = store.lock();
    auto        graph = store.load_graph();
    std::size_t added = 0;
    for (const auto& s : outcome.statements)
        added += graph.assert_statement(s) ? 1 : 0;
    if (added > 0)
        store.save_graph(graph);
    std::cout << "imported " << added << " new statements (" << outcome.statements.size() << " read)\n";
    return exit_ok;
}

int run_expand_accrual(const Cli& cli)
{
    mdm::StoreDirectory store(cli.store_path);
    auto                lock      = store.lock();
    auto                graph     = store.load_graph();
    auto                expansion = mdm::expand_accrual(graph);
    if (!expansion.added.empty())
        store.save_graph(graph);
    for (const auto& w : expansion.warnings)
        std::cerr << "warning: " << w << '\n';
    std::cout << mdm::serialize_canonical(expansion.added);
    std::cout << expansion.added.size() << " statements added\n";
    return exit_ok;
}

int run_export(const Cli& cli)
{
    mdm::StoreDirectory store(cli.store_path);
    auto                lock  = store.lock();
    auto                graph = store.load_graph();
    if (cli.export_format == "json")
        std::cout << mdm::export_json(graph) << '\n';
    else
        std::cout << mdm::serialize_canonical(graph);
    return exit_ok;
}

int run_vocab(const Cli& cli)
{
    const mdm::TermVocabulary* vocab = nullptr;
    try
    {
        vocab = &mdm::vocabulary(cli.vocab_id);
    }
    catch (const mdm::VocabularyError& e)
    {
        throw UsageError(e.what());
    }
    if (cli.json())
    {
        auto terms = json::array();
        for (const auto& t : vocab->terms)
            terms.push_back({{"local", t.local}, {"label", t.label}, {"definition", t.definition}});
        print_json({{"id", vocab->name}, {"prefix", vocab->prefix}, {"closed", vocab->closed}, {"terms", terms}});
        return exit_ok;
    }
    std::cout << vocab->name << " (" << (vocab->closed ? "closed" : "open") << ", prefix " << vocab->prefix << ")\n";
    for (const auto& t : vocab->terms)
        std::cout << t.local << '\t' << t.label << '\t' << t.definition << '\n';
    return exit_ok;
}
} // namespace

int main(int argc, char** argv)
{
    Cli      cli;
    CLI::App app{"Metadata maintenance registry"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--store", cli.store_path, "Store directory")->envname("MDM_STORE");

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cli.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* init = app.add_subcommand("init", "Create an empty store");

    auto* add = app.add_subcommand("add", "Assert a statement");
    auto* retract = app.add_subcommand("retract", "Retract a statement");
    for (auto* sub : {add, retract})
    {
        sub->add_option("subject", cli.s)->required();
        sub->add_option("predicate", cli.p)->required();
        sub->add_option("object", cli.o)->required();
    }

    auto* query = app.add_subcommand("query", "List statements matching a pattern");
    query->add_option("--s", cli.qs, "Subject CURIE");
    query->add_option("--p", cli.qp, "Predicate CURIE");
    query->add_option("--o", cli.qo, "Object CURIE or literal");
    add_format(query);

    auto* catalogs = app.add_subcommand("catalogs", "Find catalogs by collection, schema or scheme");
    catalogs->add_option("--collection", cli.collection, "Content collection CURIE");
    catalogs->add_option("--schema", cli.schema, "Schema CURIE or literal");
    catalogs->add_option("--scheme", cli.scheme, "Metadata scheme CURIE or literal");
    add_format(catalogs);

    auto* validate = app.add_subcommand("validate", "Check the store against the rule catalog");
    add_format(validate);

    auto* log = app.add_subcommand("log", "Record a maintenance function execution");
    log->add_option("function", cli.log_function)->required();
    log->add_option("timestamp", cli.log_time, "YYYY-MM-DDTHH:MM:SSZ")->required();
    log->add_option("outcome", cli.log_outcome, "success or failure")->required();
    log->add_option("note", cli.log_note);

    auto* due = app.add_subcommand("due", "List maintenance functions due at a date");
    due->add_option("--as-of", cli.as_of, "YYYY-MM-DD (default: today, UTC)");
    due->add_flag("--fail-if-due", cli.fail_if_due, "Exit 1 when anything is due");
    add_format(due);

    auto* matrix = app.add_subcommand("matrix", "Show the maintenance coverage matrix of a catalog");
    matrix->add_option("catalog", cli.catalog)->required();
    add_format(matrix);

    auto* import = app.add_subcommand("import", "Add statements from a triple file");
    import->add_option("file", cli.import_file)->required();

    auto* expand = app.add_subcommand("expand-accrual", "Derive Accrual functions from accrual statements");

    auto* exp = app.add_subcommand("export", "Write the whole graph to standard output");
    exp->add_option("--format", cli.export_format, "ntriples or json")->check(CLI::IsMember({"ntriples", "json"}));

    auto* vocab = app.add_subcommand("vocab", "List the terms of a controlled vocabulary");
    vocab->add_option("id", cli.vocab_id, "CLDType, MDMCollType, MDMFunctionType or MDMPeriodicity")->required();
    add_format(vocab);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (init->parsed())
            return run_init(cli);
        if (add->parsed())
            return run_add_retract(cli, true);
        if (retract->parsed())
            return run_add_retract(cli, false);
        if (query->parsed())
            return run_query(cli);
        if (catalogs->parsed())
            return run_catalogs(cli);
        if (validate->parsed())
            return run_validate(cli);
        if (log->parsed())
            return run_log(cli);
        if (due->parsed())
            return run_due(cli);
        if (matrix->parsed())
            return run_matrix(cli);
        if (import->parsed())
            return run_import(cli);
        if (expand->parsed())
            return run_expand_accrual(cli);
        if (exp->parsed())
            return run_export(cli);
        if (vocab->parsed())
            return run_vocab(cli);
    }
    catch (const UsageError& e)
    {
        std::cerr << "mdm: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const mdm::Error& e)
    {
        std::cerr << "mdm: " << e.what() << '\n';
        return exit_io;
    }
    catch (const std::exception& e)
    {
        std::cerr << "mdm: " << e.what() << '\n';
        return exit_io;
    }
    return exit_usage;
}
