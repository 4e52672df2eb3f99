#pragma once

#include "qshuffle/cartan.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/shuffle.hpp"
#include "qshuffle/words.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qshuffle {

struct Segment {
  int i, j;
  auto operator<=>(const Segment &) const = default;
};

/// Segments kept sorted by (i, j).
using MultiSegment = std::vector<Segment>;

MultiSegment make_multisegment(std::vector<Segment> segments);
/// Segments read from the largest to the smallest, concatenated.
Word multisegment_to_good_word(const MultiSegment &m);
/// Inverse map; throws usage_error if a Lyndon factor is not a segment.
MultiSegment good_word_to_multisegment(const Word &g);
std::string multisegment_to_string(const MultiSegment &m);

/// Classical shuffle of the segment words.
std::map<Word, Integer> standard_module_character(const MultiSegment &m);

/// lambda / mu with a shift s; rows are left justified.
struct SkewShape {
  std::vector<int> lambda;
  std::vector<int> mu;
  int shift = 0;
};

/// lambda / mu for strict partitions; row i is indented by i - 1 cells.
struct ShiftedShape {
  std::vector<int> lambda;
  std::vector<int> mu;
};

/// "5,5,3/3,1+3"; the "/mu" and "+s" parts are optional ("/0" means empty).
SkewShape parse_skew_shape(std::string_view text);
ShiftedShape parse_shifted_shape(std::string_view text);
std::string to_string(const SkewShape &shape);
std::string to_string(const ShiftedShape &shape);

/// Throws shape_constraint_violated unless the shape fits the datum.
void check_shape(const SkewShape &shape, const CartanDatum &datum);
void check_shape(const ShiftedShape &shape, const CartanDatum &datum);

/// Content words of all standard tableaux, in enumeration order. Letters are
/// the shifted contents, not yet mapped through any relabelling.
std::vector<Word> tableau_words(const SkewShape &shape);
std::vector<Word> tableau_words(const ShiftedShape &shape);

/// Good word read off the rows, top row first.
Word shape_good_word(const SkewShape &shape);
Word shape_good_word(const ShiftedShape &shape);

struct TableauCharacter {
  Word g;
  ShuffleElt sum;
  std::size_t tableaux = 0;
};

TableauCharacter skew_tableau_character(const DatumPtr &datum, const SkewShape &shape);
TableauCharacter shifted_tableau_character(const DatumPtr &datum, const ShiftedShape &shape);

/// Every skew shape with at most max_cells cells and every valid shift for
/// A_r; every shifted skew shape with at most max_cells cells for B_r.
std::vector<SkewShape> all_skew_shapes(int rank, int max_cells);
std::vector<ShiftedShape> all_shifted_shapes(int rank, int max_cells);

} // namespace qshuffle
