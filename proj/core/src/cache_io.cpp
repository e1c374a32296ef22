#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "polycount/counts.hpp"

namespace polycount {

namespace {

std::string join_profile(const Profile& mu) {
  std::string out;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(mu[i]);
  }
  return out;
}

long parse_nonnegative(const std::string& token, const std::string& line) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("cache: bad integer '" + token + "' in line: " + line);
  }
  return std::stol(token);
}

CountKey parse_record(const std::string& line, Rational& value) {
  std::istringstream in(line);
  std::string fam, g_text, n_text, profile_text, value_text, extra;
  if (!(in >> fam >> g_text >> n_text >> profile_text >> value_text) || (in >> extra)) {
    throw std::invalid_argument("cache: malformed line: " + line);
  }
  const auto family = fam.size() == 1 && std::isupper(static_cast<unsigned char>(fam[0]))
                          ? parse_family(fam)
                          : std::nullopt;
  if (!family) throw std::invalid_argument("cache: unknown family in line: " + line);

  CountKey key;
  key.family = *family;
  key.g = static_cast<int>(parse_nonnegative(g_text, line));
  key.n = static_cast<int>(parse_nonnegative(n_text, line));

  std::stringstream parts(profile_text);
  std::string item;
  while (std::getline(parts, item, ',')) key.canonical.push_back(parse_nonnegative(item, line));
  if (key.n < 1 || key.canonical.size() != static_cast<std::size_t>(key.n) || profile_text.back() == ',') {
    throw std::invalid_argument("cache: profile length does not match n in line: " + line);
  }
  if (!std::is_sorted(key.canonical.begin(), key.canonical.end(), std::greater<>())) {
    throw std::invalid_argument("cache: profile not in descending order in line: " + line);
  }
  value = Rational::parse(value_text);
  return key;
}

}  // namespace

void CountCache::save(std::ostream& os) const {
  std::vector<std::string> lines;
  {
    std::shared_lock lock(mutex_);
    lines.reserve(values_.size());
    for (const auto& [key, value] : values_) {
      lines.push_back(std::string(1, family_letter(key.family)) + ' ' + std::to_string(key.g) + ' ' +
                      std::to_string(key.n) + ' ' + join_profile(key.canonical) + ' ' + value.str());
    }
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) os << l << '\n';
}

void CountCache::load(std::istream& is) {
  std::string line;
  std::vector<std::pair<CountKey, Rational>> records;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    Rational value;
    CountKey key = parse_record(line, value);
    records.emplace_back(std::move(key), std::move(value));
  }
  // Only commit once the whole stream parsed.
  for (const auto& [key, value] : records) insert(key, value);
}

void CountCache::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  save(out);
}

void CountCache::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read cache file " + path);
  load(in);
}

}  // namespace polycount
