#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reactembed {

/// Malformed or inconsistent input data. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Domain : std::uint8_t { Protein, Molecule };

char domain_tag(Domain d);
std::optional<Domain> domain_from_tag(std::string_view tag);
Domain other_domain(Domain d);

/// Typed identifier naming one protein or molecule.
struct EntityRef {
    std::string id;
    Domain domain = Domain::Protein;

    friend bool operator==(const EntityRef&, const EntityRef&) = default;
    friend auto operator<=>(const EntityRef&, const EntityRef&) = default;
};

struct EntityRefHash {
    std::size_t operator()(const EntityRef& e) const noexcept {
        return std::hash<std::string>{}(e.id) * 31u + static_cast<std::size_t>(e.domain);
    }
};

/// One reaction with its deduplicated entity set, in first-appearance order.
struct ReactionRecord {
    std::string reaction_id;
    std::vector<EntityRef> entities;
};

}  // namespace reactembed
