#include "cosetlab/code.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cosetlab {

namespace {

// Reduced row echelon form in place; returns pivot columns. Throws RankDeficient on a zero row.
std::vector<std::size_t> row_reduce(const FieldSpec& f, Matrix& g, std::size_t n) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < g.size(); ++col) {
        std::size_t sel = row;
        while (sel < g.size() && g[sel][col] == 0) ++sel;
        if (sel == g.size()) continue;
        std::swap(g[row], g[sel]);
        const Element inv = f.inv(g[row][col]);
        for (auto& x : g[row]) x = f.mul(x, inv);
        for (std::size_t r = 0; r < g.size(); ++r) {
            if (r == row || g[r][col] == 0) continue;
            const Element factor = g[r][col];
            for (std::size_t c = 0; c < n; ++c) g[r][c] = f.sub(g[r][c], f.mul(factor, g[row][c]));
        }
        pivots.push_back(col);
        ++row;
    }
    if (row < g.size())
        throw RankDeficient("generator rows are linearly dependent (rank " + std::to_string(row) + " < " +
                            std::to_string(g.size()) + ")");
    return pivots;
}

}  // namespace

LinearCode::LinearCode(Field field, std::size_t n, Matrix generator)
    : field_(std::move(field)), n_(n), generator_(std::move(generator)) {
    const auto& f = *field_;
    if (generator_.size() > n_) throw RankDeficient("more generator rows than the code length");
    for (const auto& row : generator_) {
        if (row.size() != n_) throw SpecMismatch("generator row of length " + std::to_string(row.size()) +
                                                 ", expected " + std::to_string(n_));
        for (auto e : row)
            if (!f.contains(e)) throw SpecMismatch("generator entry " + std::to_string(e) + " outside the field");
    }
    if (!checked_power(f.q(), n_)) throw TooLarge("q^n does not fit in 64 bits");
    const auto pivots = row_reduce(f, generator_, n_);

    std::vector<bool> is_pivot(n_, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < n_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Element> h(n_, 0);
        h[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) h[pivots[r]] = f.neg(generator_[r][c]);
        parity_check_.push_back(std::move(h));
    }
}

LinearCode make_code(const Field& field, const Matrix& generator) {
    if (generator.empty()) throw SpecMismatch("cannot infer the length of an empty generator matrix");
    return LinearCode(field, generator.front().size(), generator);
}

std::uint64_t LinearCode::coset_count() const {
    auto c = checked_power(q(), redundancy());
    if (!c) throw TooLarge("number of cosets overflows 64 bits");
    return *c;
}

Word LinearCode::syndrome(const Word& y) const {
    if (y.size() != n_) throw SpecMismatch("word length " + std::to_string(y.size()) + " != n = " + std::to_string(n_));
    const auto& f = *field_;
    std::vector<Element> s(parity_check_.size(), 0);
    for (std::size_t t = 0; t < parity_check_.size(); ++t) {
        const auto& h = parity_check_[t];
        Element acc = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (y[i] != 0 && h[i] != 0) acc = f.add(acc, f.mul(h[i], y[i]));
        s[t] = acc;
    }
    return Word(field_, std::move(s));
}

std::uint64_t LinearCode::syndrome_key(const Word& y) const { return pack(syndrome(y)); }

Word LinearCode::encode(std::span<const Element> message) const {
    if (message.size() != k()) throw LengthMismatch("message length must equal k");
    const auto& f = *field_;
    std::vector<Element> out(n_, 0);
    for (std::size_t r = 0; r < k(); ++r) {
        if (message[r] == 0) continue;
        for (std::size_t c = 0; c < n_; ++c) out[c] = f.add(out[c], f.mul(message[r], generator_[r][c]));
    }
    return Word(field_, std::move(out));
}

std::vector<Word> LinearCode::codewords(const EnumerationCaps& caps) const {
    const auto count = checked_power(q(), k());
    if (!count || *count > caps.words)
        throw TooLarge("q^k exceeds the enumeration cap of " + std::to_string(caps.words));
    std::vector<Word> out;
    out.reserve(*count);
    for (std::uint64_t key = 0; key < *count; ++key) {
        const Word msg = unpack(field_, k(), key);
        out.push_back(encode(msg.entries()));
    }
    return out;
}

void for_each_word(const Field& field, std::size_t n, const EnumerationCaps& caps,
                   const std::function<void(const Word&)>& visit) {
    const auto total = checked_power(field->q(), n);
    if (!total || *total > caps.words)
        throw TooLarge("q^n exceeds the enumeration cap of " + std::to_string(caps.words));
    for (std::uint64_t key = 0; key < *total; ++key) visit(unpack(field, n, key));
}

std::size_t min_distance(const LinearCode& code, const EnumerationCaps& caps) {
    std::size_t d = code.n() + 1;
    for (const auto& c : code.codewords(caps))
        if (!c.is_zero()) d = std::min(d, c.weight());
    return d;
}

std::size_t error_capability(std::size_t d) noexcept { return d == 0 ? 0 : (d - 1) / 2; }

// ---------------------------------------------------------------------------------------------
// CosetTable

CosetTable::CosetTable(LinearCode code, OrderSpec order) : code_(std::move(code)), order_(order) {
    records_.resize(code_.coset_count());
}

const CosetRecord* CosetTable::find(std::uint64_t syndrome_key) const {
    if (syndrome_key >= records_.size() || !records_[syndrome_key]) return nullptr;
    return &*records_[syndrome_key];
}

const CosetRecord& CosetTable::at(const Word& y) const {
    const auto* rec = find(y);
    if (!rec) throw std::out_of_range("coset of " + to_string(y) + " has no record");
    return *rec;
}

bool CosetTable::is_leader(const Word& y) const {
    const auto* rec = find(y);
    if (!rec || rec->weight != y.weight()) return false;
    return std::find(rec->leaders.begin(), rec->leaders.end(), y) != rec->leaders.end();
}

std::size_t CosetTable::covering_radius() const {
    if (!complete()) throw std::logic_error("covering radius needs a complete coset table");
    std::size_t rho = 0;
    for (const auto& r : records_) rho = std::max(rho, r->weight);
    return rho;
}

std::vector<Word> CosetTable::all_leaders() const {
    std::vector<Word> out;
    for_each([&](std::uint64_t, const CosetRecord& r) { out.insert(out.end(), r.leaders.begin(), r.leaders.end()); });
    return out;
}

void CosetTable::open(std::uint64_t syndrome_key, Word leader) {
    auto& slot = records_.at(syndrome_key);
    if (slot) throw InternalInconsistency("coset opened twice");
    slot.emplace();
    slot->weight = leader.weight();
    slot->leaders.push_back(std::move(leader));
    ++filled_;
}

void CosetTable::add_leader(std::uint64_t syndrome_key, Word leader) {
    auto& slot = records_.at(syndrome_key);
    if (!slot || slot->weight != leader.weight()) throw InternalInconsistency("leader weight mismatch");
    slot->leaders.push_back(std::move(leader));
}

void CosetTable::normalize() {
    const WeightOrderLess less{order_};
    for (auto& r : records_)
        if (r) std::sort(r->leaders.begin(), r->leaders.end(), less);
}

CosetTable brute_force_coset_table(const LinearCode& code, OrderSpec order, const EnumerationCaps& caps) {
    if (code.coset_count() > caps.cosets) throw TooLarge("q^(n-k) exceeds the coset cap of " + std::to_string(caps.cosets));
    CosetTable table(code, order);
    std::vector<std::vector<Word>> best(table.capacity());
    for_each_word(code.field(), code.n(), caps, [&](const Word& y) {
        auto& slot = best[code.syndrome_key(y)];
        if (!slot.empty() && slot.front().weight() < y.weight()) return;
        if (!slot.empty() && slot.front().weight() > y.weight()) slot.clear();
        slot.push_back(y);
    });
    for (std::uint64_t s = 0; s < best.size(); ++s) {
        if (best[s].empty()) throw InternalInconsistency("syndrome " + std::to_string(s) + " not reached");
        table.open(s, best[s].front());
        for (std::size_t i = 1; i < best[s].size(); ++i) table.add_leader(s, best[s][i]);
    }
    table.normalize();
    return table;
}

std::size_t covering_radius(const CosetTable& table) { return table.covering_radius(); }

// ---------------------------------------------------------------------------------------------
// Code files

namespace {

struct Token {
    long long value;
    std::size_t column;
};

// Splits a line into integers, reporting the column of anything unexpected.
std::vector<Token> tokenize(const std::string& line, const std::string& source, std::size_t lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::string tok = line.substr(start, i - start);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || v < 0) throw ParseError(source, lineno, start + 1, "expected a non-negative integer, got '" + tok + "'");
        out.push_back({v, start + 1});
    }
    return out;
}

}  // namespace

LinearCode parse_code(std::istream& in, const std::string& source) {
    struct Line {
        std::size_t number;
        std::vector<Token> tokens;
    };
    std::vector<Line> lines;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto tokens = tokenize(raw, source, lineno);
        if (!tokens.empty()) lines.push_back({lineno, std::move(tokens)});
    }
    if (lines.empty()) throw ParseError(source, lineno + 1, 1, "missing header 'p m n k'");

    const auto& head = lines[0];
    if (head.tokens.size() != 4)
        throw ParseError(source, head.number, 1, "header must contain exactly 4 integers 'p m n k'");
    const auto p = static_cast<unsigned>(head.tokens[0].value);
    const auto m = static_cast<unsigned>(head.tokens[1].value);
    const auto n = static_cast<std::size_t>(head.tokens[2].value);
    const auto k = static_cast<std::size_t>(head.tokens[3].value);
    if (n == 0) throw ParseError(source, head.number, head.tokens[2].column, "code length must be positive");
    if (k > n) throw ParseError(source, head.number, head.tokens[3].column, "dimension exceeds length");

    std::size_t next = 1;
    std::optional<std::vector<unsigned>> poly;
    if (m > 1) {
        if (next >= lines.size()) throw ParseError(source, lineno + 1, 1, "missing defining polynomial line");
        const auto& line = lines[next++];
        if (line.tokens.size() != m + 1)
            throw ParseError(source, line.number, 1,
                             "polynomial line needs " + std::to_string(m + 1) + " coefficients, got " +
                                 std::to_string(line.tokens.size()));
        poly.emplace();
        for (const auto& t : line.tokens) {
            if (t.value >= static_cast<long long>(p)) throw ParseError(source, line.number, t.column, "coefficient outside [0, p-1]");
            poly->push_back(static_cast<unsigned>(t.value));
        }
    }

    Field field;
    try {
        field = make_field(p, m, poly);
    } catch (const Error& e) {
        throw ParseError(source, lines[next > 1 ? 1 : 0].number, 1, e.what());
    }

    Matrix g;
    for (std::size_t r = 0; r < k; ++r) {
        if (next >= lines.size()) throw ParseError(source, lineno + 1, 1, "expected " + std::to_string(k) + " generator rows");
        const auto& line = lines[next++];
        if (line.tokens.size() != n)
            throw ParseError(source, line.number, 1,
                             "generator row needs " + std::to_string(n) + " entries, got " + std::to_string(line.tokens.size()));
        std::vector<Element> row;
        for (const auto& t : line.tokens) {
            if (t.value >= static_cast<long long>(field->q()))
                throw ParseError(source, line.number, t.column, "field element outside [0, q-1]");
            row.push_back(static_cast<Element>(t.value));
        }
        g.push_back(std::move(row));
    }
    if (next < lines.size()) throw ParseError(source, lines[next].number, 1, "unexpected trailing data");
    try {
        return LinearCode(field, n, std::move(g));
    } catch (const RankDeficient& e) {
        throw ParseError(source, lines[0].number, 1, e.what());
    }
}

LinearCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, 0, "cannot open file");
    return parse_code(in, path);
}

std::string format_code(const LinearCode& code) {
    std::ostringstream out;
    const auto& f = *code.field();
    out << f.p() << ' ' << f.m() << ' ' << code.n() << ' ' << code.k() << '\n';
    if (f.m() > 1) {
        for (std::size_t j = 0; j < f.modulus().size(); ++j) out << (j ? " " : "") << f.modulus()[j];
        out << '\n';
    }
    for (const auto& row : code.generator()) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
        out << '\n';
    }
    return out.str();
}

}  // namespace cosetlab
