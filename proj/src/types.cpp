#include "pcqa/types.hpp"

namespace pcqa {

std::optional<Polarity> parse_polarity(std::string_view s) {
  if (s == "yes") return Polarity::Yes;
  if (s == "no") return Polarity::No;
  if (s == "neutral") return Polarity::Neutral;
  return std::nullopt;
}

std::optional<CompatLabel> parse_compat_label(std::string_view s) {
  if (s == "compatible") return CompatLabel::Compatible;
  if (s == "incompatible") return CompatLabel::Incompatible;
  if (s == "unknown") return CompatLabel::Unknown;
  return std::nullopt;
}

}  // namespace pcqa
