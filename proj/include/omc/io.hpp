#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "omc/classify.hpp"
#include "omc/matroid.hpp"
#include "omc/topes.hpp"

namespace omc {

// Matroid file: '#' comments, blank lines ignored.
//   om topes m=<int>          followed by sign rows
//   om covectors m=<int>      followed by sign rows
//   om realization m=<int> r=<int>   followed by rows of r rationals (p/q or int)
// An optional "labels -=<list> +=<list>" line turns the file into a training
// set. Duplicate records and wrong-length rows are rejected with line numbers.
struct MatroidFile {
    enum class Kind { topes, covectors, realization };
    Kind kind = Kind::topes;
    int m = 0;
    std::vector<SignVector> rows;   // tope / covector records
    std::optional<Realization> realization;
    std::optional<ElementSet> minus_labels;
    std::optional<ElementSet> plus_labels;
};

MatroidFile read_matroid_file(std::istream& in, const std::string& name);

// Builds the oriented matroid (tope files are trusted input; their structural
// checks still run).
OrientedMatroid matroid_from_file(const MatroidFile& file);

void write_tope_file(std::ostream& out, const OrientedMatroid& m);
void write_committee_file(std::ostream& out, const std::vector<SignVector>& members);
std::vector<SignVector> read_sign_vector_file(std::istream& in, const std::string& name);

void write_chain_file(std::ostream& out, const MaximalChain& chain);
std::vector<SignVector> read_chain_file(std::istream& in, const std::string& name);

// Localization file: one "<cocircuit> <sign>" row per line; rows for opposite
// cocircuits may be omitted (filled by antisymmetry).
std::vector<Sign> read_sigma_file(std::istream& in, const std::string& name,
                                  const OrientedMatroid& m);

std::string comma_join(const std::vector<int>& values);
std::vector<int> parse_index_list(const std::string& text); // "1,2,4"

} // namespace omc
