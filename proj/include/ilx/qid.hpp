#ifndef ILX_QID_HPP
#define ILX_QID_HPP

#include <compare>
#include <string>
#include <string_view>

namespace ilx {

inline constexpr std::string_view kLexiconPrefix = "ilexicon";
inline constexpr std::string_view kDataPrefix = "sems";

/// Prefixed name, e.g. `ilexicon:Kill`. The local part follows the
/// identifier rule `[A-Za-z][A-Za-z0-9_.]*`.
struct Qid {
  std::string prefix;
  std::string local;

  static Qid lexicon(std::string local) { return {std::string(kLexiconPrefix), std::move(local)}; }
  static Qid data(std::string local) { return {std::string(kDataPrefix), std::move(local)}; }

  std::string str() const { return prefix + ":" + local; }

  friend auto operator<=>(const Qid&, const Qid&) = default;
  friend bool operator==(const Qid&, const Qid&) = default;
};

bool is_valid_local_name(std::string_view s);

}  // namespace ilx

#endif  // ILX_QID_HPP
