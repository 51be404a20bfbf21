#ifndef MDM_GRAPH_HPP_INCLUDED
#define MDM_GRAPH_HPP_INCLUDED

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include <mdm/term.hpp>
#include <mdm/vocabulary.hpp>

namespace mdm
{
/// A triple pattern; unbound positions match anything.
struct Pattern
{
    std::optional<ResourceId>  subject;
    std::optional<ResourceId>  predicate;
    std::optional<ObjectValue> object;

    bool matches(const Statement& s) const
    {
        return (!subject || *subject == s.subject) && (!predicate || *predicate == s.predicate)
               && (!object || *object == s.object);
    }
};

/// Deduplicated statement store with subject, predicate and object indices.
///
/// Iteration and every query result follow the canonical statement order.
class Graph
{
public:
    using const_iterator = std::set<Statement>::const_iterator;

    Graph() = default;

    template <typename Range>
    explicit Graph(const Range& statements)
    {
        for (const auto& s : statements)
            assert_statement(s);
    }

    /// Returns true if the statement was not already present.
    bool assert_statement(const Statement& s)
    {
        if (!statements_.insert(s).second)
            return false;
        by_subject_[s.subject].insert(s);
        by_predicate_[s.predicate].insert(s);
        by_object_[s.object].insert(s);
        return true;
    }

    bool assert_statement(ResourceId s, ResourceId p, ObjectValue o)
    {
        return assert_statement(Statement{std::move(s), std::move(p), std::move(o)});
    }

    /// Returns true if the statement was present.
    bool retract_statement(const Statement& s)
    {
        if (statements_.erase(s) == 0)
            return false;
        erase_from(by_subject_, s.subject, s);
        erase_from(by_predicate_, s.predicate, s);
        erase_from(by_object_, s.object, s);
        return true;
    }

    bool retract_statement(ResourceId s, ResourceId p, ObjectValue o)
    {
        return retract_statement(Statement{std::move(s), std::move(p), std::move(o)});
    }

    std::size_t size() const noexcept
    {
        return statements_.size();
    }
    bool empty() const noexcept
    {
        return statements_.empty();
    }
    const_iterator begin() const noexcept
    {
        return statements_.begin();
    }
    const_iterator end() const noexcept
    {
        return statements_.end();
    }
    bool contains(const Statement& s) const
    {
        return statements_.count(s) != 0;
    }
    bool contains(const ResourceId& s, const ResourceId& p, const ObjectValue& o) const
    {
        return contains(Statement{s, p, o});
    }

    std::vector<Statement> statements_matching(const Pattern& pattern) const
    {
        // Scan the narrowest bound index.
        const std::set<Statement>* candidates = &statements_;
        auto narrow = [&](const auto& index, const auto& key) {
            auto it = index.find(key);
            if (it == index.end())
                candidates = &empty_set();
            else if (it->second.size() < candidates->size())
                candidates = &it->second;
        };
        if (pattern.subject)
            narrow(by_subject_, *pattern.subject);
        if (pattern.predicate)
            narrow(by_predicate_, *pattern.predicate);
        if (pattern.object)
            narrow(by_object_, *pattern.object);

        std::vector<Statement> out;
        for (const auto& s : *candidates)
            if (pattern.matches(s))
                out.push_back(s);
        return out;
    }

    std::vector<ObjectValue> objects(const ResourceId& subject, const ResourceId& predicate) const
    {
        std::vector<ObjectValue> out;
        for (const auto& s : statements_matching({subject, predicate, std::nullopt}))
            out.push_back(s.object);
        return out;
    }

    std::vector<ResourceId> subjects(const ResourceId& predicate, const ObjectValue& object) const
    {
        std::vector<ResourceId> out;
        for (const auto& s : statements_matching({std::nullopt, predicate, object}))
            out.push_back(s.subject);
        return out;
    }

    /// Distinct subjects of `predicate`, in canonical order.
    std::vector<ResourceId> subjects_of(const ResourceId& predicate) const
    {
        std::vector<ResourceId> out;
        for (const auto& s : statements_matching({std::nullopt, predicate, std::nullopt}))
            if (out.empty() || out.back() != s.subject)
                out.push_back(s.subject);
        return out;
    }

    bool has_statements_about(const ResourceId& subject) const
    {
        return by_subject_.count(subject) != 0;
    }

    /// True if `id` occurs as a subject or as a resource object.
    bool mentions(const ResourceId& id) const
    {
        return has_statements_about(id) || by_object_.count(ObjectValue(id)) != 0;
    }

    bool has_type(const ResourceId& subject, const ResourceId& type) const
    {
        return contains(subject, terms::dc_type, type);
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.statements_ == b.statements_;
    }

private:
    template <typename Index, typename Key>
    static void erase_from(Index& index, const Key& key, const Statement& s)
    {
        auto it = index.find(key);
        it->second.erase(s);
        if (it->second.empty())
            index.erase(it);
    }

    static const std::set<Statement>& empty_set()
    {
        static const std::set<Statement> none;
        return none;
    }

    std::set<Statement>                        statements_;
    std::map<ResourceId, std::set<Statement>>  by_subject_;
    std::map<ResourceId, std::set<Statement>>  by_predicate_;
    std::map<ObjectValue, std::set<Statement>> by_object_;
};

/// The resource `prefix:local` naming a term of `vocab`.
inline ResourceId term_id(VocabId vocab, std::string_view local)
{
    std::string curie(vocabulary(vocab).prefix);
    curie += ':';
    curie += local;
    return ResourceId(std::move(curie));
}

/// The term's local name if `value` is a resource written under `vocab`'s prefix and is a member.
inline std::optional<std::string_view> vocabulary_term(const ObjectValue& value, VocabId vocab)
{
    const auto* id = value.as_resource();
    if (id == nullptr)
        return std::nullopt;
    const auto& v = vocabulary(vocab);
    if (id->prefix() != v.prefix || !v.contains(id->local()))
        return std::nullopt;
    return id->local();
}

namespace detail
{
    inline std::vector<ResourceId> sorted_unique(std::vector<ResourceId> ids)
    {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return ids;
    }
} // namespace detail

/// Catalogs linked from `collection` through cld:collectionDescription.
inline std::vector<ResourceId> catalogs_describing(const Graph& g, const ResourceId& collection)
{
    std::vector<ResourceId> out;
    for (const auto& o : g.objects(collection, terms::cld_collection_description))
        if (const auto* id = o.as_resource())
            out.push_back(*id);
    return detail::sorted_unique(std::move(out));
}

/// Catalogs whose mdm:hasSchema is `schema`.
inline std::vector<ResourceId> catalogs_with_schema(const Graph& g, const ObjectValue& schema)
{
    return detail::sorted_unique(g.subjects(terms::has_schema, schema));
}

/// Catalogs with a schema that follows `scheme` (hasSchema then followsScheme).
inline std::vector<ResourceId> catalogs_following_scheme(const Graph& g, const ObjectValue& scheme)
{
    std::vector<ResourceId> out;
    for (const auto& schema : g.subjects(terms::follows_scheme, scheme))
        for (const auto& catalog : g.subjects(terms::has_schema, schema))
            out.push_back(catalog);
    return detail::sorted_unique(std::move(out));
}
} // namespace mdm

#endif // MDM_GRAPH_HPP_INCLUDED
