#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace malaab {

enum class Category : uint8_t { N, A, PREP, DET, NUM };

enum class Flag : uint8_t {
    LieuSport,
    Toponyme,
    Ville,
    Pays,
    Region,
    Perso,
    Fonction,
    CatGeo,
    PR,
    DETZ,
    Apostrophe,
    Demonym,
    Mois,
    DetOpt,
};
inline constexpr int kFlagCount = 14;

enum class Gender : uint8_t { Masculine, Feminine };
enum class Number : uint8_t { Singular, Plural };

// Small value-type flag set; iteration order is enum declaration order.
class FlagSet {
public:
    FlagSet() = default;

    void set(Flag f) { bits_ |= bit(f); }
    void clear(Flag f) { bits_ &= ~bit(f); }
    bool has(Flag f) const { return (bits_ & bit(f)) != 0; }
    bool contains(const FlagSet& other) const { return (bits_ & other.bits_) == other.bits_; }
    bool empty() const { return bits_ == 0; }
    FlagSet united(const FlagSet& other) const {
        FlagSet r;
        r.bits_ = bits_ | other.bits_;
        return r;
    }
    bool operator==(const FlagSet&) const = default;

    std::vector<Flag> to_list() const;

private:
    static uint32_t bit(Flag f) { return 1u << static_cast<unsigned>(f); }
    uint32_t bits_ = 0;
};

struct FeatureSet {
    Category category = Category::N;
    FlagSet flags;
    std::optional<Gender> gender;
    std::optional<Number> number;

    // Ville/Pays/Region each imply Toponyme.
    void close_implications();

    // Merges inflection-rule features over entry features; the rule wins on
    // gender and number.
    FeatureSet merged_with_rule(const FlagSet& rule_flags, std::optional<Gender> g,
                                std::optional<Number> n) const;

    bool operator==(const FeatureSet&) const = default;
};

struct FeatureConstraint {
    Category category = Category::N;
    FlagSet required;
    std::optional<Gender> gender;
    std::optional<Number> number;

    bool operator==(const FeatureConstraint&) const = default;
};

// True iff the candidate's category matches and every required flag and
// gender/number value is present.
bool satisfies(const FeatureSet& candidate, const FeatureConstraint& constraint);

const char* category_name(Category c);
std::optional<Category> parse_category(std::string_view name);

const char* flag_name(Flag f);
// Case-insensitive; Table-style dictionaries write e.g. "apostrophe".
std::optional<Flag> parse_flag(std::string_view name);

char gender_letter(Gender g);
char number_letter(Number n);

}  // namespace malaab
