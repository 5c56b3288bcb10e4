#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powfree/assembly.hpp"
#include "powfree/delta_machine.hpp"

namespace powfree {

// Key/value text: one "key: value" per line, '#' starts a comment, words inline.
struct DeltaFixture {
  std::size_t k = 3;
  DeltaTuple tuple;
  std::optional<Letter> y;
};

/// Keys: alphabet, alpha, s (stream spec), sigma, w, eta, x, u, window, y.
/// window defaults to min_window of the tuple.
DeltaFixture parse_delta_fixture(std::string_view text);
std::string format_delta_fixture(const DeltaTuple& t, std::optional<Letter> y, const Alphabet& alphabet);

struct BiInfiniteSpec {
  std::size_t k = 3;
  BiInfiniteWord v;
  std::vector<RecurrenceDeclaration> declarations;
  std::optional<Word> w;
  std::optional<Exponent> alpha;
};

/// Keys: alphabet, left, right, recurrent (repeatable, "LETTER SIDE"), w, alpha.
BiInfiniteSpec parse_bi_infinite_spec(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace powfree
