#pragma once

#include "lexcount/biword.hpp"
#include "lexcount/tableau.hpp"

namespace lexcount {

/* Insertion tableau P and recording tableau Q of a common shape. */
struct TableauPair {
    SemistandardTableau p;
    SemistandardTableau q;

    bool operator==(const TableauPair&) const = default;
};

/*
 * Row insertion, columns left to right: v_i bumps the leftmost entry of
 * a row strictly greater than it, bumped letters cascade downwards, and
 * u_i records the cell where the shape grew. Lexicographic input (the
 * Biword invariant) is exactly what makes Q semistandard.
 */
TableauPair rsk_forward(const Biword& a);

/*
 * Inverse correspondence. Repeatedly removes the rightmost cell of Q
 * holding its maximal letter (the most recent insertion), reverse-bumps
 * the matching cell out of P, and prepends the recovered column. Throws
 * std::invalid_argument if the shapes differ or either filling is not a
 * valid SSYT.
 */
Biword rsk_inverse(const TableauPair& pair);

} // namespace lexcount
