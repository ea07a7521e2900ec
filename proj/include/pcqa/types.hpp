#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace pcqa {

// Answer polarity and the compatibility label it maps to. The two enums are
// linked one-to-one: yes <-> compatible, no <-> incompatible,
// neutral <-> unknown.
enum class Polarity { Yes, No, Neutral };
enum class CompatLabel { Compatible, Incompatible, Unknown };

inline CompatLabel to_compat_label(Polarity p) {
  switch (p) {
    case Polarity::Yes: return CompatLabel::Compatible;
    case Polarity::No: return CompatLabel::Incompatible;
    default: return CompatLabel::Unknown;
  }
}

inline Polarity to_polarity(CompatLabel l) {
  switch (l) {
    case CompatLabel::Compatible: return Polarity::Yes;
    case CompatLabel::Incompatible: return Polarity::No;
    default: return Polarity::Neutral;
  }
}

inline const char* polarity_name(Polarity p) {
  switch (p) {
    case Polarity::Yes: return "yes";
    case Polarity::No: return "no";
    default: return "neutral";
  }
}

inline const char* compat_label_name(CompatLabel l) {
  switch (l) {
    case CompatLabel::Compatible: return "compatible";
    case CompatLabel::Incompatible: return "incompatible";
    default: return "unknown";
  }
}

std::optional<Polarity> parse_polarity(std::string_view s);
std::optional<CompatLabel> parse_compat_label(std::string_view s);

}  // namespace pcqa
