#include "l2rank/fixtures.hpp"

#include "l2rank/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

namespace l2rank {

namespace {

std::vector<int> first_primes(int count) {
  std::vector<int> primes;
  for (int candidate = 2; static_cast<int>(primes.size()) < count; ++candidate) {
    bool prime = true;
    for (int p : primes)
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

std::string generator_list(int n) {
  std::string out;
  for (int i = 1; i <= n; ++i) out += (i > 1 ? ", x" : "x") + std::to_string(i);
  return out;
}

}  // namespace

std::filesystem::path fixture_directory() {
  if (const char* env = std::getenv("L2RANK_FIXTURES"); env && *env) return env;
  return L2RANK_DEFAULT_FIXTURE_DIR;
}

ParsedPresentation load_fixture(const std::string& name) {
  const std::filesystem::path file = fixture_directory() / (name + ".grp");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_presentation(buffer.str());
  }

  std::smatch m;
  if (std::regex_match(name, m, std::regex(R"(free_(\d+))"))) {
    const int n = std::stoi(m[1]);
    if (n < 1 || n > 64) throw InvalidArgument("free_<n> needs 1 <= n <= 64");
    return parse_presentation("< " + generator_list(n) + " | >");
  }
  if (std::regex_match(name, m, std::regex(R"(g0_(\d+)_(\d+))"))) {
    const int n = std::stoi(m[1]);
    const int p = std::stoi(m[2]);
    if (n < 1 || n > 64 || p < 2) throw InvalidArgument("g0_<n>_<p> needs 1 <= n <= 64, p >= 2");
    std::string rels;
    for (int i = 1; i <= n; ++i) rels += (i > 1 ? ", x" : "x") + std::to_string(i) + "^" + std::to_string(p);
    return parse_presentation("< " + generator_list(n) + " | " + rels + " >");
  }
  if (std::regex_match(name, m, std::regex(R"(hn_(\d+))"))) {
    const int n = std::stoi(m[1]);
    if (n < 2 || n > 32) throw InvalidArgument("hn_<k> needs 2 <= k <= 32");
    const std::vector<int> primes = first_primes(n);
    std::string rels;
    for (int i = 1; i <= n; ++i) rels += (i > 1 ? ", x" : "x") + std::to_string(i) + "^" + std::to_string(primes[0]);
    for (int i = 2; i <= n; ++i)
      rels += ", (x1*x" + std::to_string(i) + ")^" + std::to_string(primes[static_cast<std::size_t>(i - 1)]);
    return parse_presentation("< " + generator_list(n) + " | " + rels + " >");
  }
  throw InvalidArgument("unknown fixture '" + name + "'");
}

}  // namespace l2rank
