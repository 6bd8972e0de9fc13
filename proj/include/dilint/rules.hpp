#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

namespace dilint {

// The twelve dependency-injection anti-patterns, in catalog order.
enum class RuleId { IIJ, CCI, CPM, FDC, USI, SDP, DCC, OWI, FCO, ODI, MAI, MFI };

inline constexpr std::array<RuleId, 12> kAllRules = {
    RuleId::IIJ, RuleId::CCI, RuleId::CPM, RuleId::FDC, RuleId::USI, RuleId::SDP,
    RuleId::DCC, RuleId::OWI, RuleId::FCO, RuleId::ODI, RuleId::MAI, RuleId::MFI};

inline constexpr std::string_view to_string(RuleId r) {
  constexpr std::array<std::string_view, 12> kIds = {"IIJ", "CCI", "CPM", "FDC", "USI", "SDP",
                                                     "DCC", "OWI", "FCO", "ODI", "MAI", "MFI"};
  return kIds[static_cast<std::size_t>(r)];
}

inline constexpr std::string_view rule_name(RuleId r) {
  constexpr std::array<std::string_view, 12> kNames = {
      "Intransigent injection",      "Concrete class injection",
      "Complex producer method",     "Fat DI class",
      "Useless injection",           "Static dependence provider",
      "Direct container call",       "Open window injection",
      "Framework coupling",          "Open door injection",
      "Multiple assigned injection", "Multiple forms of injection"};
  return kNames[static_cast<std::size_t>(r)];
}

inline std::optional<RuleId> parse_rule_id(std::string_view text) {
  for (RuleId r : kAllRules)
    if (to_string(r) == text) return r;
  return std::nullopt;
}

struct Finding {
  RuleId rule_id = RuleId::IIJ;
  std::string file_path;
  std::string class_name;
  std::string element_name;
  int source_line = 0;
  std::string message;

  // identity of a finding within a run
  auto key() const {
    return std::tie(rule_id, file_path, class_name, element_name, source_line);
  }

  bool operator==(const Finding&) const = default;
};

// Report order: file, line, rule ID, then class and element to break ties.
inline bool report_order(const Finding& a, const Finding& b) {
  return std::forward_as_tuple(a.file_path, a.source_line, to_string(a.rule_id), a.class_name,
                               a.element_name, a.message) <
         std::forward_as_tuple(b.file_path, b.source_line, to_string(b.rule_id), b.class_name,
                               b.element_name, b.message);
}

}  // namespace dilint
