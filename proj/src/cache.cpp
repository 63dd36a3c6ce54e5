#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "classlaw/error.hpp"
#include "classlaw/lawcheck.hpp"

namespace classlaw {

namespace {

const mpz_class& checksum_modulus() {
  static const mpz_class m = (mpz_class(1) << 61) - 1;
  return m;
}

mpz_class checksum(const std::vector<mpz_class>& coeffs) {
  mpz_class sum = 0;
  for (const auto& c : coeffs) sum += c;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), sum.get_mpz_t(), checksum_modulus().get_mpz_t());
  return r;
}

[[noreturn]] void corrupt(const FundamentalDiscriminant& d, const std::string& why) {
  throw IntegrityError("corrupt cache record for D = " + std::to_string(d.value()) + ": " + why);
}

// Strict decimal: optional '-', digits, no leading zeros except "0".
bool parse_decimal(const std::string& tok, mpz_class& out) {
  std::size_t i = tok.size() > 0 && tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) return false;
  for (std::size_t k = i; k < tok.size(); ++k)
    if (tok[k] < '0' || tok[k] > '9') return false;
  if (tok[i] == '0' && tok.size() > i + 1) return false;
  if (tok == "-0") return false;
  return out.set_str(tok, 10) == 0;
}

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    const std::size_t end = line.find(' ', start);
    out.push_back(line.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

std::string format_cache_record(const ClassPolynomial& poly) {
  std::string out = "D " + std::to_string(poly.disc.value()) + "\n";
  out += "h " + std::to_string(poly.degree()) + "\n";
  out += "coeffs";
  for (const auto& c : poly.coeffs) out += " " + c.get_str();
  out += "\ncheck " + checksum(poly.coeffs).get_str() + "\n";
  return out;
}

ClassPolynomial parse_cache_record(const FundamentalDiscriminant& d, std::uint64_t h,
                                   std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string body(text);
    if (body.empty() || body.back() != '\n') corrupt(d, "missing final newline");
    body.pop_back();
    std::istringstream in(body);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  if (lines.size() != 4) corrupt(d, "expected 4 lines, found " + std::to_string(lines.size()));

  auto field = [&](std::size_t idx, const char* key) {
    auto words = split_words(lines[idx]);
    if (words.size() < 2 || words[0] != key)
      corrupt(d, "line " + std::to_string(idx + 1) + " must start with '" + key + " '");
    words.erase(words.begin());
    return words;
  };
  auto single = [&](std::size_t idx, const char* key) {
    auto words = field(idx, key);
    mpz_class v;
    if (words.size() != 1 || !parse_decimal(words[0], v))
      corrupt(d, std::string("malformed '") + key + "' line");
    return v;
  };

  if (single(0, "D") != d.value()) corrupt(d, "record is for a different discriminant");
  const mpz_class stored_h = single(1, "h");
  if (stored_h != h) corrupt(d, "degree " + stored_h.get_str() + " != h(D) = " + std::to_string(h));

  std::vector<mpz_class> coeffs;
  for (const auto& tok : field(2, "coeffs")) {
    mpz_class v;
    if (!parse_decimal(tok, v)) corrupt(d, "malformed coefficient '" + tok + "'");
    coeffs.push_back(std::move(v));
  }
  if (coeffs.size() != h + 1)
    corrupt(d, std::to_string(coeffs.size()) + " coefficients for degree " + std::to_string(h));
  if (coeffs.back() != 1) corrupt(d, "polynomial is not monic");
  if (single(3, "check") != checksum(coeffs)) corrupt(d, "checksum mismatch");
  return ClassPolynomial{d, std::move(coeffs)};
}

std::filesystem::path ClassPolyCache::record_path(std::int64_t d) const {
  const auto abs_d = d < 0 ? static_cast<std::uint64_t>(-d) : static_cast<std::uint64_t>(d);
  return dir_ / ("hd_" + std::to_string(abs_d) + ".txt");
}

std::optional<ClassPolynomial> ClassPolyCache::load(const FundamentalDiscriminant& d) const {
  const auto path = record_path(d.value());
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cache_record(d, class_number(d), buf.str());
}

void ClassPolyCache::store(const ClassPolynomial& poly) const {
  static std::atomic<std::uint64_t> counter{0};
  std::filesystem::create_directories(dir_);
  const auto path = record_path(poly.disc.value());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "." +
         std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << format_cache_record(poly);
    out.flush();
    if (!out) throw ResourceError("cannot write cache record " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace classlaw
