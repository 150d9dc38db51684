#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "framedual/errors.hpp"
#include "framedual/frame.hpp"

namespace framedual {

Frame read_frm1(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("frame file: empty input");
    std::istringstream header(line);
    std::string magic;
    long r = 0, n = 0;
    if (!(header >> magic >> r >> n) || magic != "FRM1")
        throw ParseError("frame file: expected header `FRM1 <r> <N>`");
    std::string trailing;
    if (header >> trailing) throw ParseError("frame file: trailing tokens in header");
    if (r < 1 || n < 1 || r > 100000 || n > 1000000)
        throw ParseError("frame file: dimensions out of range");

    Matrix m(static_cast<int>(r), static_cast<int>(n));
    for (long col = 0; col < n; ++col) {
        if (!std::getline(in, line))
            throw ParseError("frame file: expected " + std::to_string(n) + " vector lines, got " +
                             std::to_string(col));
        std::istringstream row(line);
        auto dst = m.col(static_cast<int>(col));
        for (long i = 0; i < r; ++i) {
            double v = 0.0;
            if (!(row >> v))
                throw ParseError("frame file: line " + std::to_string(col + 2) + " has fewer than " +
                                 std::to_string(r) + " values");
            if (!std::isfinite(v))
                throw ParseError("frame file: non-finite value on line " + std::to_string(col + 2));
            dst[static_cast<std::size_t>(i)] = v;
        }
        if (row >> trailing)
            throw ParseError("frame file: line " + std::to_string(col + 2) + " has more than " +
                             std::to_string(r) + " values");
    }
    return Frame(std::move(m));
}

void write_frm1(const Frame& f, std::ostream& out) {
    out << "FRM1 " << f.dim() << ' ' << f.count() << '\n';
    out.precision(17);
    for (int n = 0; n < f.count(); ++n) {
        auto col = f.vector(n);
        for (int i = 0; i < f.dim(); ++i) {
            if (i) out << ' ';
            out << col[static_cast<std::size_t>(i)];
        }
        out << '\n';
    }
    if (!out) throw ParseError("frame file: write failure");
}

Frame load_frame(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("frame file: cannot open " + path.string());
    return read_frm1(in);
}

void save_frame(const Frame& f, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("frame file: cannot open " + path.string() + " for writing");
    write_frm1(f, out);
}

} // namespace framedual
