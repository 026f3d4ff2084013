#include "parser_fuzz.hpp"

#include <algorithm>
#include <random>

#include "ontomap/errors.hpp"
#include "ontomap/syntax.hpp"

namespace testing_support {

namespace {

std::string random_bytes(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 64), byte(0, 255), pick(0, 3);
  // Lean on the parser's own alphabet now and then.
  static const std::string alphabet = "()=<>:\"^#\n Prefix Ontology Declaration Class SubClassOf 12";
  std::string s(static_cast<std::size_t>(len(rng)), '\0');
  for (auto& c : s)
    c = pick(rng) == 0 ? alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]
                       : static_cast<char>(byte(rng));
  return s;
}

std::string mutate(std::mt19937& rng, std::string s) {
  std::uniform_int_distribution<int> edits(1, 4), byte(0, 255), op(0, 2);
  for (int k = edits(rng); k > 0 && !s.empty(); --k) {
    auto at = std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
    switch (op(rng)) {
      case 0: s[at] = static_cast<char>(byte(rng)); break;
      case 1: s.erase(at, std::uniform_int_distribution<std::size_t>(1, 8)(rng)); break;
      default: s.insert(at, 1, static_cast<char>(byte(rng))); break;
    }
  }
  return s;
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')) + 1;
}

}  // namespace

FuzzResult fuzz_parser(std::uint32_t seed, std::size_t count, const std::string& seed_text) {
  std::mt19937 rng(seed);
  FuzzResult r;
  for (std::size_t k = 0; k < count; ++k) {
    auto input = k % 2 == 0 ? random_bytes(rng) : mutate(rng, seed_text);
    ++r.inputs;
    try {
      ontomap::parse_document(input);
      ++r.parsed;
    } catch (const ontomap::ParseError& e) {
      if (e.line() < 1 || e.column() < 1 || e.line() > line_count(input)) {
        if (r.failure.empty()) r.failure = "unpositioned error " + std::string(e.what());
      } else {
        ++r.rejected;
      }
    } catch (const std::exception& e) {
      if (r.failure.empty()) r.failure = std::string("escaped ") + e.what();
    }
  }
  return r;
}

}  // namespace testing_support
