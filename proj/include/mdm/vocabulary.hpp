#ifndef MDM_VOCABULARY_HPP_INCLUDED
#define MDM_VOCABULARY_HPP_INCLUDED

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <mdm/error.hpp>

namespace mdm
{
/// Identifies one of the compiled-in controlled vocabularies.
enum class VocabId
{
    cld_type,
    coll_type,
    function_type,
    periodicity,
};

/// One controlled term. `local` is the part after the prefix in a CURIE.
struct Term
{
    std::string_view local;
    std::string_view label;
    std::string_view definition;
};

/// A named, closed or open set of terms, in declaration order.
struct TermVocabulary
{
    VocabId                id;
    std::string_view       name;
    std::string_view       prefix; // CURIE prefix under which terms are written
    bool                   closed;
    std::span<const Term>  terms;

    bool contains(std::string_view local) const noexcept
    {
        return std::any_of(terms.begin(), terms.end(),
                           [&](const Term& t) { return t.local == local; });
    }

    const Term* find(std::string_view local) const noexcept
    {
        auto it = std::find_if(terms.begin(), terms.end(),
                               [&](const Term& t) { return t.local == local; });
        return it == terms.end() ? nullptr : &*it;
    }
};

namespace detail
{
    inline constexpr Term cld_type_terms[] = {
        {"Catalogue", "Catalogue",
         "A collection of metadata records describing the items of another collection."},
        {"CollectionImage", "Image collection", "A collection whose items are images."},
        {"CollectionPhysicalObject", "Physical object collection",
         "A collection whose items are physical objects."},
    };

    inline constexpr Term coll_type_terms[] = {
        {"Legacy", "Legacy", "Metadata records inherited from another source."},
        {"Storage", "Storage",
         "Canonical metadata records used to derive records for various purposes."},
        {"Delivery", "Delivery", "Metadata records used in a particular delivery system."},
    };

    inline constexpr Term function_type_terms[] = {
        {"Accrual", "Accrual", "Addition of new records."},
        {"Deletion", "Deletion", "Removal of records."},
        {"Modification", "Modification", "Change to the content of existing records."},
        {"Transformation", "Transformation", "Conversion of records from one form to another."},
        {"Reporting", "Reporting", "Production of reports about the records."},
        {"Export", "Export", "Delivery of records to another system."},
        {"Mapping", "Mapping", "Crosswalk of records between metadata schemes."},
        {"Migration", "Migration", "Movement of records to a new platform or scheme."},
        {"Exposure", "Exposure", "Making records available for harvesting or discovery."},
        {"ActivationDeactivation", "Activation / deactivation",
         "Switching records or the catalog on or off in a delivery system."},
    };

    inline constexpr Term periodicity_terms[] = {
        {"Continuous", "Continuous", "Performed continuously; always due."},
        {"Daily", "Daily", "Every day."},
        {"Weekly", "Weekly", "Every 7 days."},
        {"Biweekly", "Biweekly", "Every 14 days."},
        {"Monthly", "Monthly", "Every calendar month."},
        {"Quarterly", "Quarterly", "Every 3 calendar months."},
        {"Semiannual", "Semiannual", "Every 6 calendar months."},
        {"Annual", "Annual", "Every year."},
        {"Biennial", "Biennial", "Every 2 years."},
        {"Irregular", "Irregular", "No fixed schedule; never automatically due."},
    };

    inline constexpr std::array<TermVocabulary, 4> vocabularies = {{
        {VocabId::cld_type, "CLDType", "cldtype", false, cld_type_terms},
        {VocabId::coll_type, "MDMCollType", "mdm", true, coll_type_terms},
        {VocabId::function_type, "MDMFunctionType", "mdm", true, function_type_terms},
        {VocabId::periodicity, "MDMPeriodicity", "mdm", true, periodicity_terms},
    }};
} // namespace detail

inline const TermVocabulary& vocabulary(VocabId id) noexcept
{
    return detail::vocabularies[static_cast<std::size_t>(id)];
}

inline std::span<const TermVocabulary> all_vocabularies() noexcept
{
    return detail::vocabularies;
}

inline std::optional<VocabId> vocab_id_from_name(std::string_view name) noexcept
{
    for (const auto& v : detail::vocabularies)
        if (v.name == name)
            return v.id;
    return std::nullopt;
}

inline const TermVocabulary& vocabulary(std::string_view name)
{
    if (auto id = vocab_id_from_name(name))
        return vocabulary(*id);
    throw VocabularyError("vocabulary not found: " + std::string(name));
}

inline bool is_member(VocabId id, std::string_view term) noexcept
{
    return vocabulary(id).contains(term);
}

/// Throws VocabularyError for an unknown vocabulary name.
inline bool is_member(std::string_view vocab_name, std::string_view term)
{
    return vocabulary(vocab_name).contains(term);
}

inline std::span<const Term> terms_of(VocabId id) noexcept
{
    return vocabulary(id).terms;
}

inline std::span<const Term> terms_of(std::string_view vocab_name)
{
    return vocabulary(vocab_name).terms;
}
} // namespace mdm

#endif // MDM_VOCABULARY_HPP_INCLUDED
