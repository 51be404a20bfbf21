#ifndef MDM_TERM_HPP_INCLUDED
#define MDM_TERM_HPP_INCLUDED

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include <mdm/error.hpp>

namespace mdm
{
struct Prefix
{
    std::string_view name;
    std::string_view iri;
};

/// The fixed prefix table. `mdm` and `gen` are bound to example namespaces.
inline constexpr std::array<Prefix, 6> prefixes = {{
    {"dc", "http://purl.org/dc/elements/1.1/"},
    {"dcterms", "http://purl.org/dc/terms/"},
    {"cld", "http://purl.org/cld/terms/"},
    {"cldtype", "http://purl.org/cld/cdtype/"},
    {"mdm", "http://example.org/mdm/terms/"},
    {"gen", "http://example.org/mdm/gen/"},
}};

inline const Prefix* find_prefix(std::string_view name) noexcept
{
    for (const auto& p : prefixes)
        if (p.name == name)
            return &p;
    return nullptr;
}

namespace detail
{
    // Returns the number of bytes of the UTF-8 sequence starting at `i`, or 0 if invalid.
    inline std::size_t utf8_sequence_length(std::string_view s, std::size_t i) noexcept
    {
        auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
        unsigned char c = byte(i);
        if (c < 0x80)
            return 1;
        std::size_t   n;
        std::uint32_t cp;
        if ((c & 0xE0) == 0xC0)
        {
            n  = 2;
            cp = c & 0x1F;
        }
        else if ((c & 0xF0) == 0xE0)
        {
            n  = 3;
            cp = c & 0x0F;
        }
        else if ((c & 0xF8) == 0xF0)
        {
            n  = 4;
            cp = c & 0x07;
        }
        else
            return 0;
        if (i + n > s.size())
            return 0;
        for (std::size_t k = 1; k < n; ++k)
        {
            if ((byte(i + k) & 0xC0) != 0x80)
                return 0;
            cp = (cp << 6) | (byte(i + k) & 0x3F);
        }
        static constexpr std::uint32_t min_for_length[] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < min_for_length[n] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            return 0;
        return n;
    }
} // namespace detail

inline bool is_valid_utf8(std::string_view s) noexcept
{
    for (std::size_t i = 0; i < s.size();)
    {
        auto n = detail::utf8_sequence_length(s, i);
        if (n == 0)
            return false;
        i += n;
    }
    return true;
}

/// Why `curie` is not a well-formed `prefix:local` identifier, or nullopt if it is.
inline std::optional<std::string> curie_problem(std::string_view curie)
{
    auto colon = curie.find(':');
    if (colon == std::string_view::npos)
        return "not a CURIE (missing ':'): " + std::string(curie);
    auto prefix = curie.substr(0, colon);
    auto local  = curie.substr(colon + 1);
    if (find_prefix(prefix) == nullptr)
        return "unknown prefix " + std::string(prefix);
    if (local.empty())
        return "empty local name in " + std::string(curie);
    for (char ch : local)
    {
        auto c = static_cast<unsigned char>(ch);
        if (c <= 0x20 || c == 0x7F || c == '<' || c == '>' || c == '"')
            return "invalid character in local name of " + std::string(curie);
    }
    if (!is_valid_utf8(local))
        return "invalid UTF-8 in " + std::string(curie);
    return std::nullopt;
}

/// A named resource written as a CURIE with one of the fixed prefixes.
class ResourceId
{
public:
    /// Throws SyntaxError naming the offending token.
    explicit ResourceId(std::string curie) : curie_(std::move(curie))
    {
        if (auto problem = curie_problem(curie_))
            throw SyntaxError(*problem);
    }

    static std::optional<ResourceId> try_parse(std::string_view curie)
    {
        if (curie_problem(curie))
            return std::nullopt;
        return ResourceId(std::string(curie), unchecked{});
    }

    const std::string& curie() const noexcept
    {
        return curie_;
    }
    std::string_view prefix() const noexcept
    {
        return std::string_view(curie_).substr(0, curie_.find(':'));
    }
    std::string_view local() const noexcept
    {
        return std::string_view(curie_).substr(curie_.find(':') + 1);
    }
    std::string expanded() const
    {
        return std::string(find_prefix(prefix())->iri) + std::string(local());
    }

    friend bool operator==(const ResourceId&, const ResourceId&) = default;
    friend std::strong_ordering operator<=>(const ResourceId& a, const ResourceId& b) noexcept
    {
        return a.curie_.compare(b.curie_) <=> 0;
    }

private:
    struct unchecked
    {};
    ResourceId(std::string curie, unchecked) : curie_(std::move(curie)) {}

    std::string curie_;
};

/// Quotes and escapes text for the triple grammar.
inline std::string render_literal(std::string_view text)
{
    std::string out;
    out.reserve(text.size() + 2);
    out += '"';
    for (char c : text)
    {
        switch (c)
        {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        default:
            out += c;
        }
    }
    out += '"';
    return out;
}

/// Why `text` cannot be a literal value, or nullopt if it can.
inline std::optional<std::string> literal_problem(std::string_view text)
{
    for (char ch : text)
    {
        auto c = static_cast<unsigned char>(ch);
        if ((c < 0x20 && c != '\n' && c != '\t') || c == 0x7F)
            return "control character in literal";
    }
    if (!is_valid_utf8(text))
        return "invalid UTF-8 in literal";
    return std::nullopt;
}

/// UTF-8 text value. Tab and newline are the only control characters allowed.
class Literal
{
public:
    explicit Literal(std::string text) : text_(std::move(text))
    {
        if (auto problem = literal_problem(text_))
            throw SyntaxError(*problem);
    }

    const std::string& text() const noexcept
    {
        return text_;
    }
    std::string rendered() const
    {
        return render_literal(text_);
    }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal& a, const Literal& b)
    {
        if (a.text_ == b.text_)
            return std::strong_ordering::equal;
        return a.rendered().compare(b.rendered()) <=> 0;
    }

private:
    std::string text_;
};

/// Statement object: a resource or a literal. Resources order before literals.
class ObjectValue
{
public:
    ObjectValue(ResourceId id) : value_(std::move(id)) {}
    ObjectValue(Literal lit) : value_(std::move(lit)) {}

    bool is_resource() const noexcept
    {
        return std::holds_alternative<ResourceId>(value_);
    }
    bool is_literal() const noexcept
    {
        return std::holds_alternative<Literal>(value_);
    }
    const ResourceId& resource() const
    {
        return std::get<ResourceId>(value_);
    }
    const Literal& literal() const
    {
        return std::get<Literal>(value_);
    }
    const ResourceId* as_resource() const noexcept
    {
        return std::get_if<ResourceId>(&value_);
    }

    std::string rendered() const
    {
        return is_resource() ? resource().curie() : literal().rendered();
    }

    friend bool operator==(const ObjectValue&, const ObjectValue&) = default;
    friend std::strong_ordering operator<=>(const ObjectValue& a, const ObjectValue& b)
    {
        if (auto c = a.value_.index() <=> b.value_.index(); c != 0)
            return c;
        if (a.is_resource())
            return a.resource() <=> b.resource();
        return a.literal() <=> b.literal();
    }

private:
    std::variant<ResourceId, Literal> value_;
};

/// One (subject, predicate, object) assertion. `<=>` is the canonical order.
struct Statement
{
    ResourceId  subject;
    ResourceId  predicate;
    ObjectValue object;

    friend bool                 operator==(const Statement&, const Statement&) = default;
    friend std::strong_ordering operator<=>(const Statement& a, const Statement& b)
    {
        if (auto c = a.subject <=> b.subject; c != 0)
            return c;
        if (auto c = a.predicate <=> b.predicate; c != 0)
            return c;
        return a.object <=> b.object;
    }
};

/// Statement in the line grammar, without the trailing newline.
inline std::string render_statement(const Statement& s)
{
    return s.subject.curie() + ' ' + s.predicate.curie() + ' ' + s.object.rendered() + " .";
}

/// The property and class identifiers the model uses.
namespace terms
{
    inline const ResourceId dc_type{"dc:type"};
    inline const ResourceId cld_collection_description{"cld:collectionDescription"};
    inline const ResourceId cldtype_catalogue{"cldtype:Catalogue"};
    inline const ResourceId has_schema{"mdm:hasSchema"};
    inline const ResourceId follows_scheme{"mdm:followsScheme"};
    inline const ResourceId maintenance_function{"mdm:maintenanceFunction"};
    inline const ResourceId maint_periodicity{"mdm:maintPeriodicity"};
    inline const ResourceId is_referenced_by{"dcterms:isReferencedBy"};
    inline const ResourceId is_engaged_via{"mdm:isEngagedVia"};
    inline const ResourceId administrator{"mdm:administrator"};
    inline const ResourceId contact{"mdm:contact"};
    inline const ResourceId accrual_method{"dcterms:accrualMethod"};
    inline const ResourceId accrual_periodicity{"dcterms:accrualPeriodicity"};
    inline const ResourceId note{"gen:note"};
} // namespace terms
} // namespace mdm

#endif // MDM_TERM_HPP_INCLUDED
