#include "malaab/features.hpp"

#include "malaab/errors.hpp"

#include <array>
#include <cctype>

namespace malaab {

namespace {

constexpr std::array<const char*, kFlagCount> kFlagNames = {
    "LieuSport", "Toponyme", "Ville",      "Pays",    "Region",  "Perso",  "Fonction",
    "Cat_Geo",   "PR",       "DETZ",       "Apostrophe", "Demonym", "Mois", "DetOpt",
};

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::vector<Flag> FlagSet::to_list() const {
    std::vector<Flag> out;
    for (int i = 0; i < kFlagCount; ++i) {
        const Flag f = static_cast<Flag>(i);
        if (has(f)) out.push_back(f);
    }
    return out;
}

void FeatureSet::close_implications() {
    if (flags.has(Flag::Ville) || flags.has(Flag::Pays) || flags.has(Flag::Region))
        flags.set(Flag::Toponyme);
}

FeatureSet FeatureSet::merged_with_rule(const FlagSet& rule_flags, std::optional<Gender> g,
                                        std::optional<Number> n) const {
    FeatureSet out = *this;
    out.flags = out.flags.united(rule_flags);
    if (g) out.gender = g;
    if (n) out.number = n;
    out.close_implications();
    return out;
}

bool satisfies(const FeatureSet& candidate, const FeatureConstraint& constraint) {
    if (candidate.category != constraint.category) return false;
    if (!candidate.flags.contains(constraint.required)) return false;
    if (constraint.gender && candidate.gender != constraint.gender) return false;
    if (constraint.number && candidate.number != constraint.number) return false;
    return true;
}

const char* category_name(Category c) {
    switch (c) {
        case Category::N: return "N";
        case Category::A: return "A";
        case Category::PREP: return "PREP";
        case Category::DET: return "DET";
        case Category::NUM: return "NUM";
    }
    return "?";
}

std::optional<Category> parse_category(std::string_view name) {
    if (name == "N") return Category::N;
    if (name == "A") return Category::A;
    if (name == "PREP") return Category::PREP;
    if (name == "DET") return Category::DET;
    if (name == "NUM") return Category::NUM;
    return std::nullopt;
}

const char* flag_name(Flag f) { return kFlagNames[static_cast<size_t>(f)]; }

std::optional<Flag> parse_flag(std::string_view name) {
    const std::string needle = lower(name);
    for (int i = 0; i < kFlagCount; ++i) {
        if (needle == lower(kFlagNames[static_cast<size_t>(i)])) return static_cast<Flag>(i);
    }
    return std::nullopt;
}

char gender_letter(Gender g) { return g == Gender::Masculine ? 'm' : 'f'; }
char number_letter(Number n) { return n == Number::Singular ? 's' : 'p'; }

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedLine: return "MalformedLine";
        case ErrorCode::UnknownParadigm: return "UnknownParadigm";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UndefinedSubgraph: return "UndefinedSubgraph";
        case ErrorCode::NoFinalState: return "NoFinalState";
        case ErrorCode::RecursionLimit: return "RecursionLimit";
        case ErrorCode::MissingFrenchEntry: return "MissingFrenchEntry";
        case ErrorCode::MissingInflection: return "MissingInflection";
        case ErrorCode::UnknownMonth: return "UnknownMonth";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::DocMismatch: return "DocMismatch";
        case ErrorCode::ResourceError: return "ResourceError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

}  // namespace malaab
