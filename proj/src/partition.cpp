#include "lexcount/partition.hpp"

namespace lexcount {

namespace {

void emit_partitions(int remaining, int max_next, int slots_left,
                     std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (slots_left == 0 || max_next == 0)
        return;
    // largest admissible next part first gives reverse-lexicographic order
    int hi = std::min(remaining, max_next);
    for (int part = hi; part >= 1; --part) {
        // the rest must fit in the remaining slots even at this part size
        if (static_cast<long long>(part) * slots_left < remaining)
            break;
        prefix.push_back(part);
        emit_partitions(remaining - part, part, slots_left - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int weight, PartitionBounds bounds) {
    if (weight < 0)
        throw std::invalid_argument("partition weight must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(weight, bounds.max_part, bounds.max_parts, prefix, out);
    return out;
}

mpz_class superfactorial(int m) {
    mpz_class acc = 1;
    mpz_class fact = 1;
    for (int t = 1; t < m; ++t) {
        fact *= t;
        acc *= fact;
    }
    return acc;
}

mpz_class d_lambda(const Partition& lambda, int m) {
    if (m < 0)
        throw std::invalid_argument("alphabet size must be nonnegative");
    if (lambda.length() > m)
        return 0;  // a column of that height cannot be strictly increasing

    // pad with zeros to exactly m rows, then take the product over row pairs
    mpz_class num = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            num *= lambda.part(i) - i - lambda.part(j) + j;

    mpz_class den = superfactorial(m);
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0)
        throw std::logic_error("d_lambda: superfactorial division left a remainder");
    return quot;
}

} // namespace lexcount
