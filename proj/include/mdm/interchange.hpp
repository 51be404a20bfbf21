#ifndef MDM_INTERCHANGE_HPP_INCLUDED
#define MDM_INTERCHANGE_HPP_INCLUDED

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <mdm/graph.hpp>
#include <mdm/term.hpp>
#include <mdm/vocabulary.hpp>

namespace mdm
{
struct ParseDiagnostic
{
    std::size_t line; // 1-based
    std::string message;

    friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

/// Result of parsing triple text. Callers in strict mode discard `statements` when
/// `errors` is non-empty.
struct ParseOutcome
{
    std::vector<Statement>       statements;
    std::vector<ParseDiagnostic> errors;

    bool ok() const noexcept
    {
        return errors.empty();
    }
};

namespace detail
{
    inline bool is_blank(char c) noexcept
    {
        return c == ' ' || c == '\t' || c == '\r';
    }

    class LineParser
    {
    public:
        explicit LineParser(std::string_view line) : line_(line) {}

        // Throws SyntaxError (without line number) on the first problem.
        Statement parse()
        {
            skip_blanks();
            auto subject = resource(next_token());
            require_blank();
            auto predicate = resource(next_token());
            require_blank();
            ObjectValue object = peek() == '"' ? ObjectValue(literal()) : ObjectValue(resource(next_token()));
            bool spaced = at_blank();
            skip_blanks();
            if (at_end() || peek() != '.')
                throw SyntaxError("missing terminal period");
            if (!spaced)
                throw SyntaxError("expected space before terminal period");
            ++pos_;
            skip_blanks();
            if (!at_end())
                throw SyntaxError("unexpected text after terminal period");
            return Statement{std::move(subject), std::move(predicate), std::move(object)};
        }

    private:
        bool at_end() const noexcept
        {
            return pos_ >= line_.size();
        }
        char peek() const noexcept
        {
            return line_[pos_];
        }
        bool at_blank() const noexcept
        {
            return !at_end() && is_blank(peek());
        }
        void skip_blanks() noexcept
        {
            while (at_blank())
                ++pos_;
        }
        void require_blank()
        {
            if (at_end())
                throw SyntaxError("missing terminal period");
            if (!at_blank())
                throw SyntaxError("expected space between terms");
            skip_blanks();
            if (at_end())
                throw SyntaxError("missing terminal period");
        }

        std::string_view next_token()
        {
            auto start = pos_;
            while (!at_end() && !is_blank(peek()))
                ++pos_;
            return line_.substr(start, pos_ - start);
        }

        static ResourceId resource(std::string_view token)
        {
            if (token == ".")
                throw SyntaxError("missing term before terminal period");
            return ResourceId(std::string(token));
        }

        Literal literal()
        {
            ++pos_; // opening quote
            std::string text;
            while (true)
            {
                if (at_end())
                    throw SyntaxError("unterminated literal");
                char c = line_[pos_++];
                if (c == '"')
                    break;
                if (c != '\\')
                {
                    text += c;
                    continue;
                }
                if (at_end())
                    throw SyntaxError("unterminated literal");
                char e = line_[pos_++];
                switch (e)
                {
                case '"':
                    text += '"';
                    break;
                case '\\':
                    text += '\\';
                    break;
                case 'n':
                    text += '\n';
                    break;
                case 't':
                    text += '\t';
                    break;
                default:
                    throw SyntaxError(std::string("bad escape \\") + e);
                }
            }
            return Literal(std::move(text));
        }

        std::string_view line_;
        std::size_t      pos_ = 0;
    };
} // namespace detail

/// Parses the line-oriented triple grammar:
///
///     subject SP predicate SP object SP '.'
///
/// Blank lines and lines whose first non-blank character is `#` are ignored. Each bad
/// line yields exactly one diagnostic; duplicate statements collapse to their first
/// occurrence.
inline ParseOutcome parse_triples(std::string_view text)
{
    ParseOutcome         out;
    std::set<Statement>  seen;
    std::size_t          line_no = 0;
    std::size_t          pos     = 0;
    while (pos < text.size())
    {
        auto eol  = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos       = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#')
            continue;
        try
        {
            auto s = detail::LineParser(line).parse();
            if (seen.insert(s).second)
                out.statements.push_back(std::move(s));
        }
        catch (const SyntaxError& e)
        {
            out.errors.push_back({line_no, e.message()});
        }
    }
    return out;
}

/// Parses a single object term: a CURIE or a double-quoted literal with escapes.
inline ObjectValue parse_object(std::string_view token)
{
    std::string line = "gen:x gen:x " + std::string(token) + " .";
    return detail::LineParser(line).parse().object;
}

/// Parses and throws SyntaxError for the first bad line.
inline std::vector<Statement> parse_triples_strict(std::string_view text)
{
    auto outcome = parse_triples(text);
    if (!outcome.ok())
        throw SyntaxError(outcome.errors.front().message, outcome.errors.front().line);
    return std::move(outcome.statements);
}

/// Byte-deterministic rendering: sorted, deduplicated, one LF-terminated line each.
template <typename Range>
std::string serialize_canonical(const Range& statements)
{
    std::vector<Statement> sorted(std::begin(statements), std::end(statements));
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::string out;
    for (const auto& s : sorted)
    {
        out += render_statement(s);
        out += '\n';
    }
    return out;
}

inline nlohmann::json to_json(const ObjectValue& value)
{
    if (value.is_resource())
        return {{"id", value.resource().curie()}};
    return {{"value", value.literal().text()}};
}

inline nlohmann::json to_json(const Statement& s)
{
    return {{"subject", s.subject.curie()},
            {"predicate", s.predicate.curie()},
            {"object", to_json(s.object)}};
}

/// `{subject: {predicate: [value, ...]}}`. Subjects and predicates go one per line with
/// two-space indentation; each value array stays on its predicate's line. Keys appear in
/// canonical (byte) order, so the output is deterministic.
inline std::string export_json(const Graph& g)
{
    if (g.empty())
        return "{}";
    auto quote = [](const std::string& s) { return nlohmann::json(s).dump(); };

    std::string out = "{";
    const ResourceId* subject   = nullptr;
    const ResourceId* predicate = nullptr;
    for (const auto& s : g)
    {
        if (subject == nullptr || *subject != s.subject)
        {
            if (subject != nullptr)
                out += "]\n  },";
            out += "\n  " + quote(s.subject.curie()) + ": {";
            subject   = &s.subject;
            predicate = nullptr;
        }
        if (predicate == nullptr || *predicate != s.predicate)
        {
            if (predicate != nullptr)
                out += "],";
            out += "\n    " + quote(s.predicate.curie()) + ": [";
            predicate = &s.predicate;
        }
        else
            out += ", ";
        out += s.object.is_resource() ? "{\"id\": " + quote(s.object.resource().curie()) + "}"
                                      : "{\"value\": " + quote(s.object.literal().text()) + "}";
    }
    out += "]\n  }\n}";
    return out;
}

struct AccrualExpansion
{
    std::vector<Statement>   added;
    std::vector<std::string> warnings;
};

/// Turns DC CD AP accrual statements on catalogs into Accrual-typed maintenance
/// functions named `gen:accrual-<catalog local name>`.
///
/// Catalogs already linked to an Accrual function are left alone, so a second run adds
/// nothing. An accrual periodicity that is not an MDMPeriodicity term is kept on the new
/// function as a gen:note literal and reported as a warning.
inline AccrualExpansion expand_accrual(Graph& g)
{
    AccrualExpansion out;
    const auto       accrual = term_id(VocabId::function_type, "Accrual");

    std::vector<ResourceId> sources = g.subjects_of(terms::accrual_method);
    for (auto& s : g.subjects_of(terms::accrual_periodicity))
        sources.push_back(std::move(s));
    sources = detail::sorted_unique(std::move(sources));

    for (const auto& catalog : sources)
    {
        if (!g.has_type(catalog, terms::cldtype_catalogue))
        {
            out.warnings.push_back(catalog.curie()
                                   + ": has accrual statements but is not typed cldtype:Catalogue; skipped");
            continue;
        }
        bool linked = false;
        for (const auto& f : g.objects(catalog, terms::maintenance_function))
            if (const auto* id = f.as_resource(); id && g.has_type(*id, accrual))
                linked = true;
        if (linked)
            continue;

        ResourceId function("gen:accrual-" + std::string(catalog.local()));
        auto       add = [&](Statement s) {
            if (g.assert_statement(s))
                out.added.push_back(std::move(s));
        };
        add({catalog, terms::maintenance_function, function});
        add({function, terms::dc_type, accrual});

        bool have_period = false;
        for (const auto& value : g.objects(catalog, terms::accrual_periodicity))
        {
            std::string key = value.is_literal() ? value.literal().text() : std::string(value.resource().local());
            bool member = is_member(VocabId::periodicity, key);
            if (member && !have_period)
            {
                add({function, terms::maint_periodicity, term_id(VocabId::periodicity, key)});
                have_period = true;
                continue;
            }
            add({function, terms::note, value.is_literal() ? value.literal() : Literal(value.rendered())});
            out.warnings.push_back(catalog.curie() + ": accrual periodicity " + value.rendered()
                                   + (member ? " is an additional value" : " is not an MDMPeriodicity term")
                                   + "; recorded as gen:note on " + function.curie());
        }
    }
    return out;
}
} // namespace mdm

#endif // MDM_INTERCHANGE_HPP_INCLUDED
