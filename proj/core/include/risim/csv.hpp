#ifndef RISIM_CSV_HPP
#define RISIM_CSV_HPP

#include <sstream>
#include <string>
#include <vector>

namespace risim {

// Fixed CSV numeric format: 6 significant digits, '.' decimal separator.
inline std::string csv_number(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(6);
    os << v;
    return os.str();
}

inline std::string csv_join(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    out += '\n';
    return out;
}

} // namespace risim

#endif
