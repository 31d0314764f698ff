#include "genred/generic_group.hpp"

namespace genred {

namespace {

QPoly minus_one(std::size_t e) { return QPoly::y_pow_minus(e, 1); }   // y^e - 1
QPoly plus_one(std::size_t e) { return QPoly::y_pow_plus(e, 1); }     // y^e + 1

QPoly product(const std::vector<QPoly>& fs) {
    QPoly r = QPoly::one();
    for (const auto& f : fs) r = r * f;
    return r;
}

}  // namespace

std::optional<TableRow> order_table_row(char family, std::size_t rank, unsigned twist, bool very_twisted) {
    std::vector<QPoly> fs;
    std::size_t y_power = 0;
    std::string label = (twist > 1 ? std::to_string(twist) : std::string()) + std::string(1, family) +
                        std::to_string(rank);

    if (very_twisted) {
        if (twist != 2) return std::nullopt;
        if ((family == 'B' || family == 'C') && rank == 2) {
            label = "2B2";
            y_power = 4;
            fs = {minus_one(2), plus_one(4)};
        } else if (family == 'G' && rank == 2) {
            y_power = 6;
            fs = {minus_one(2), plus_one(6)};
        } else if (family == 'F' && rank == 4) {
            y_power = 24;
            fs = {minus_one(2), plus_one(6), minus_one(8), plus_one(12)};
        } else {
            return std::nullopt;
        }
    } else if (twist == 1) {
        switch (family) {
            case 'A': {
                // type A_{rank}, |G| = q^{n(n-1)/2} (q^2-1)...(q^n-1) with n = rank+1
                std::size_t n = rank + 1;
                y_power = n * (n - 1) / 2;
                for (std::size_t k = 2; k <= n; ++k) fs.push_back(minus_one(k));
                break;
            }
            case 'B':
            case 'C': {
                if (rank < 2) return std::nullopt;
                y_power = rank * rank;
                for (std::size_t k = 1; k <= rank; ++k) fs.push_back(minus_one(2 * k));
                break;
            }
            case 'D': {
                if (rank < 3) return std::nullopt;
                y_power = rank * rank - rank;
                for (std::size_t k = 1; k + 1 <= rank; ++k) fs.push_back(minus_one(2 * k));
                fs.push_back(minus_one(rank));
                break;
            }
            case 'G':
                if (rank != 2) return std::nullopt;
                y_power = 6;
                fs = {minus_one(2), minus_one(6)};
                break;
            case 'F':
                if (rank != 4) return std::nullopt;
                y_power = 24;
                fs = {minus_one(2), minus_one(6), minus_one(8), minus_one(12)};
                break;
            case 'E':
                if (rank == 6) {
                    y_power = 36;
                    fs = {minus_one(2), minus_one(5), minus_one(6), minus_one(8), minus_one(9), minus_one(12)};
                } else if (rank == 7) {
                    y_power = 63;
                    fs = {minus_one(2), minus_one(6), minus_one(8), minus_one(10),
                          minus_one(12), minus_one(14), minus_one(18)};
                } else if (rank == 8) {
                    y_power = 120;
                    fs = {minus_one(2), minus_one(8),  minus_one(12), minus_one(14),
                          minus_one(18), minus_one(20), minus_one(24), minus_one(30)};
                } else {
                    return std::nullopt;
                }
                break;
            default:
                return std::nullopt;
        }
    } else if (twist == 2) {
        switch (family) {
            case 'A': {
                // 2A_{rank}: q^{n(n-1)/2} (q^2-1)(q^3+1)...(q^n -(-1)^n), n = rank+1
                std::size_t n = rank + 1;
                y_power = n * (n - 1) / 2;
                for (std::size_t k = 2; k <= n; ++k) fs.push_back(k % 2 == 0 ? minus_one(k) : plus_one(k));
                break;
            }
            case 'D': {
                if (rank < 3) return std::nullopt;
                y_power = rank * rank - rank;
                for (std::size_t k = 1; k + 1 <= rank; ++k) fs.push_back(minus_one(2 * k));
                fs.push_back(plus_one(rank));
                break;
            }
            case 'E': {
                if (rank != 6) return std::nullopt;
                y_power = 36;
                fs = {minus_one(2), plus_one(5), minus_one(6), minus_one(8), plus_one(9), minus_one(12)};
                break;
            }
            default:
                return std::nullopt;
        }
    } else if (twist == 3) {
        if (family != 'D' || rank != 4) return std::nullopt;
        y_power = 12;
        // q^12 (q^2-1)(q^6-1)(q^8+q^4+1)
        std::vector<QuadNum> c(9, QuadNum(0));
        c[0] = QuadNum(1);
        c[4] = QuadNum(1);
        c[8] = QuadNum(1);
        fs = {minus_one(2), minus_one(6), QPoly(c)};
    } else {
        return std::nullopt;
    }

    TableRow row;
    row.label = label;
    row.y_power = y_power;
    row.product = product(fs);
    row.full = QPoly::y_power(y_power) * row.product;
    return row;
}

std::optional<TableRow> order_table_row(const std::string& label) {
    if (label.empty()) return std::nullopt;
    unsigned twist = 1;
    std::size_t pos = 0;
    if (isdigit(static_cast<unsigned char>(label[0]))) {
        twist = label[0] - '0';
        pos = 1;
    }
    if (pos >= label.size()) return std::nullopt;
    char family = label[pos];
    std::size_t rank = 0;
    try {
        rank = std::stoul(label.substr(pos + 1));
    } catch (...) {
        return std::nullopt;
    }
    bool very = twist == 2 && ((family == 'B' && rank == 2) || (family == 'C' && rank == 2) ||
                               (family == 'G' && rank == 2) || (family == 'F' && rank == 4));
    return order_table_row(family, rank, twist, very);
}

}  // namespace genred
