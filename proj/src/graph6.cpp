#include <grundylab/graph6.hpp>

#include <istream>
#include <ostream>

namespace grundylab {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string describe(char c)
{
    return "byte " + std::to_string(static_cast<unsigned char>(c));
}

} // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at offset " + std::to_string(offset))
    , offset_(offset)
{
}

Graph parse_graph6(std::string_view text)
{
    std::size_t pos = 0;
    if (text.starts_with(kHeader))
        pos = kHeader.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '
               || text.back() == '\t'))
        text.remove_suffix(1);

    auto sextet = [&](std::size_t at) {
        if (at >= text.size())
            throw Graph6Error("truncated input", at);
        const int value = static_cast<unsigned char>(text[at]) - kBias;
        if (value < 0 || value > 63)
            throw Graph6Error("invalid " + describe(text[at]), at);
        return value;
    };

    if (pos >= text.size())
        throw Graph6Error("empty input", pos);

    long n = sextet(pos);
    if (n == 63) {
        // '~' introduces an 18-bit order; '~~' a 36-bit order.
        if (pos + 1 < text.size() && text[pos + 1] == '~')
            throw Graph6Error("order exceeds 64", pos);
        n = 0;
        for (int i = 1; i <= 3; ++i)
            n = (n << 6) | sextet(pos + i);
        if (n < 63)
            throw Graph6Error("extended header used for order " + std::to_string(n), pos);
        if (n > kMaxVertices)
            throw Graph6Error("order " + std::to_string(n) + " exceeds 64", pos);
        pos += 4;
    } else {
        pos += 1;
    }

    const long bit_count = n * (n - 1) / 2;
    const std::size_t byte_count = static_cast<std::size_t>((bit_count + 5) / 6);
    if (text.size() < pos + byte_count)
        throw Graph6Error("truncated bit field: expected " + std::to_string(byte_count)
                + " bytes",
            text.size());
    if (text.size() > pos + byte_count)
        throw Graph6Error("trailing data after bit field", pos + byte_count);

    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t at = pos + static_cast<std::size_t>(k / 6);
            if ((sextet(at) >> (5 - k % 6)) & 1) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    if (k % 6 != 0) {
        const std::size_t last = pos + byte_count - 1;
        if ((sextet(last) & ((1 << (6 - k % 6)) - 1)) != 0)
            throw Graph6Error("nonzero padding bits", last);
    }
    return Graph::from_rows(std::move(rows));
}

std::string write_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_list(std::istream& in)
{
    std::vector<Graph> graphs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what(), e.offset());
        }
    }
    return graphs;
}

void write_graph6_list(std::ostream& out, const std::vector<Graph>& graphs)
{
    for (const auto& g : graphs)
        out << write_graph6(g) << '\n';
}

} // namespace grundylab
