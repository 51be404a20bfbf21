#ifndef MDM_CONFORMANCE_HPP_INCLUDED
#define MDM_CONFORMANCE_HPP_INCLUDED

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <mdm/graph.hpp>
#include <mdm/vocabulary.hpp>

namespace mdm
{
enum class Severity
{
    error,
    warning,
    info,
};

inline std::string_view to_string(Severity s) noexcept
{
    switch (s)
    {
    case Severity::error:
        return "error";
    case Severity::warning:
        return "warning";
    case Severity::info:
        return "info";
    }
    return "?";
}

struct Rule
{
    std::string_view id;
    Severity         severity;
    std::string_view description;
};

inline constexpr std::array<Rule, 11> rules = {{
    {"R01", Severity::error, "Every subject of mdm:maintenanceFunction has dc:type cldtype:Catalogue."},
    {"R02", Severity::error, "Every object of cld:collectionDescription has dc:type cldtype:Catalogue."},
    {"R03", Severity::error, "Every mdm: dc:type value on a catalog is an MDMCollType term."},
    {"R04", Severity::error, "Every maintenance function has at least one dc:type from MDMFunctionType."},
    {"R05", Severity::error,
     "Every mdm:maintPeriodicity value is an MDMPeriodicity term; more than one per function is a warning."},
    {"R06", Severity::warning, "Every subject of mdm:followsScheme is the object of some mdm:hasSchema."},
    {"R07", Severity::error, "Every mdm:hasSchema value is a resource identifier."},
    {"R08", Severity::warning, "Every maintenance function has an mdm:contact and an mdm:administrator."},
    {"R09", Severity::warning, "Every MDMFunctionType-typed resource is the object of some mdm:maintenanceFunction."},
    {"R10", Severity::info, "Every content collection has a cld:collectionDescription link."},
    {"R11", Severity::info,
     "Every documentation, script/service, department and contact resource has statements of its own."},
}};

/// The fixed rule catalog, in rule order.
inline std::span<const Rule> rule_catalog() noexcept
{
    return rules;
}

struct Finding
{
    std::string rule_id;
    Severity    severity;
    ResourceId  subject;
    std::string message;

    friend bool operator==(const Finding&, const Finding&) = default;
    friend bool operator<(const Finding& a, const Finding& b)
    {
        return std::tie(a.rule_id, a.subject, a.message) < std::tie(b.rule_id, b.subject, b.message);
    }
};

struct Report
{
    std::vector<Finding> findings; // sorted by rule, subject, message
    std::size_t          errors   = 0;
    std::size_t          warnings = 0;
    std::size_t          infos    = 0;

    std::size_t count(Severity s) const noexcept
    {
        switch (s)
        {
        case Severity::error:
            return errors;
        case Severity::warning:
            return warnings;
        case Severity::info:
            return infos;
        }
        return 0;
    }

    friend bool operator==(const Report&, const Report&) = default;
};

namespace detail
{
    class ReportBuilder
    {
    public:
        void add(std::string_view rule_id, const ResourceId& subject, std::string message)
        {
            add(rule_id, severity_of(rule_id), subject, std::move(message));
        }

        void add(std::string_view rule_id, Severity severity, const ResourceId& subject, std::string message)
        {
            report_.findings.push_back({std::string(rule_id), severity, subject, std::move(message)});
        }

        Report finish() &&
        {
            auto& f = report_.findings;
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            for (const auto& finding : f)
            {
                switch (finding.severity)
                {
                case Severity::error:
                    ++report_.errors;
                    break;
                case Severity::warning:
                    ++report_.warnings;
                    break;
                case Severity::info:
                    ++report_.infos;
                    break;
                }
            }
            return std::move(report_);
        }

    private:
        static Severity severity_of(std::string_view rule_id)
        {
            for (const auto& r : rules)
                if (r.id == rule_id)
                    return r.severity;
            return Severity::error;
        }

        Report report_;
    };
} // namespace detail

/// Checks `g` against the full rule catalog. Never throws on model problems; it reports them.
inline Report validate(const Graph& g)
{
    detail::ReportBuilder out;
    const auto&           catalogue = terms::cldtype_catalogue;

    std::set<ResourceId> functions;
    for (const auto& s : g.statements_matching({std::nullopt, terms::maintenance_function, std::nullopt}))
        if (const auto* f = s.object.as_resource())
            functions.insert(*f);

    // R01
    for (const auto& s : g.subjects_of(terms::maintenance_function))
        if (!g.has_type(s, catalogue))
            out.add("R01", s, "subject of mdm:maintenanceFunction is not typed cldtype:Catalogue");

    // R02
    for (const auto& s : g.statements_matching({std::nullopt, terms::cld_collection_description, std::nullopt}))
    {
        if (const auto* target = s.object.as_resource())
        {
            if (!g.has_type(*target, catalogue))
                out.add("R02", *target, "object of cld:collectionDescription is not typed cldtype:Catalogue");
        }
        else
        {
            out.add("R02", s.subject,
                    "cld:collectionDescription value " + s.object.rendered() + " is a literal, not a catalog");
        }
    }

    // R03
    for (const auto& catalog : g.subjects(terms::dc_type, catalogue))
        for (const auto& type : g.objects(catalog, terms::dc_type))
        {
            const auto* id = type.as_resource();
            if (id != nullptr && id->prefix() == vocabulary(VocabId::coll_type).prefix
                && !is_member(VocabId::coll_type, id->local()))
                out.add("R03", catalog, "dc:type " + id->curie() + " is not an MDMCollType term");
        }

    // R04, R08
    for (const auto& f : functions)
    {
        bool typed = false;
        for (const auto& type : g.objects(f, terms::dc_type))
            typed = typed || vocabulary_term(type, VocabId::function_type).has_value();
        if (!typed)
            out.add("R04", f, "maintenance function has no dc:type from MDMFunctionType");

        std::string missing;
        if (g.objects(f, terms::contact).empty())
            missing += " mdm:contact";
        if (g.objects(f, terms::administrator).empty())
            missing += " mdm:administrator";
        if (!missing.empty())
            out.add("R08", f, "maintenance function lacks" + missing);
    }

    // R05
    std::map<ResourceId, std::size_t> periodicity_count;
    for (const auto& s : g.statements_matching({std::nullopt, terms::maint_periodicity, std::nullopt}))
    {
        ++periodicity_count[s.subject];
        if (!vocabulary_term(s.object, VocabId::periodicity))
            out.add("R05", s.subject, "mdm:maintPeriodicity " + s.object.rendered() + " is not an MDMPeriodicity term");
    }
    for (const auto& [subject, n] : periodicity_count)
        if (n > 1)
            out.add("R05", Severity::warning, subject,
                    "function has " + std::to_string(n) + " mdm:maintPeriodicity values; expected at most one");

    // R06
    for (const auto& schema : g.subjects_of(terms::follows_scheme))
        if (g.subjects(terms::has_schema, schema).empty())
            out.add("R06", schema, "has mdm:followsScheme but is not the mdm:hasSchema of any catalog");

    // R07
    for (const auto& s : g.statements_matching({std::nullopt, terms::has_schema, std::nullopt}))
        if (s.object.is_literal())
            out.add("R07", s.subject, "mdm:hasSchema value " + s.object.rendered() + " is not a resource identifier");

    // R09, R10
    for (const auto& s : g.statements_matching({std::nullopt, terms::dc_type, std::nullopt}))
    {
        if (vocabulary_term(s.object, VocabId::function_type) && functions.count(s.subject) == 0)
            out.add("R09", s.subject, "typed " + s.object.rendered() + " but not linked by any mdm:maintenanceFunction");

        const auto* type = s.object.as_resource();
        if (type != nullptr && type->prefix() == vocabulary(VocabId::cld_type).prefix && *type != catalogue
            && !g.has_type(s.subject, catalogue) && g.objects(s.subject, terms::cld_collection_description).empty())
            out.add("R10", s.subject, "content collection has no cld:collectionDescription");
    }

    // R11
    for (const auto* p : {&terms::is_referenced_by, &terms::is_engaged_via, &terms::administrator, &terms::contact})
        for (const auto& s : g.statements_matching({std::nullopt, *p, std::nullopt}))
            if (const auto* target = s.object.as_resource(); target && !g.has_statements_about(*target))
                out.add("R11", *target, "referenced via " + p->curie() + " but has no statements");

    return std::move(out).finish();
}
} // namespace mdm

#endif // MDM_CONFORMANCE_HPP_INCLUDED
