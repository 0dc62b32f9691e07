#include "coslice/render.hpp"

#include <sstream>

namespace coslice {

std::string format_matrix(const IntMatrix& m) {
    std::string out = "[";
    for (Index i = 0; i < m.rows(); ++i) {
        if (i > 0) out += ",";
        out += "[";
        for (Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ",";
            out += m(i, j).get_str();
        }
        out += "]";
    }
    return out + "]";
}

std::string format_mackey_text(const MackeyFunctor& m, const std::string& indent) {
    std::ostringstream out;
    for (long k = m.spec.n; k >= 0; --k) {
        out << indent << "level " << k << ": " << group_to_string(m.levels[k]) << "\n";
        out << indent << "  gamma = " << format_matrix(m.act[k].matrix()) << "\n";
        if (k > 0) {
            out << indent << "  r = " << format_matrix(m.res[k - 1].matrix()) << "\n";
            out << indent << "  t = " << format_matrix(m.tr[k - 1].matrix()) << "\n";
        }
    }
    return out.str();
}

std::string slice_tower_text(const SliceTower& tower) {
    std::ostringstream out;
    out << "slice tower for C_" << tower.spec.order() << " (p=" << tower.spec.p
        << ", n=" << tower.spec.n << ")\n";
    for (const SliceTowerEntry& e : tower.entries) {
        out << "dim " << e.dim << ":\n";
        out << " layer:\n" << format_mackey_text(e.layer, "  ");
        out << " section:\n" << format_mackey_text(e.section, "  ");
    }
    return out.str();
}

ChartData chart_from_tower(const SliceTower& tower) {
    ChartData chart;
    chart.spec = tower.spec;
    for (const SliceTowerEntry& e : tower.entries) {
        ChartMarker marker;
        marker.filtration = e.dim;
        for (const AbelianGroup& g : e.layer.levels)
            marker.level_labels.push_back(group_to_string(g));
        chart.markers.push_back(std::move(marker));
    }
    return chart;
}

namespace {

std::string joined_labels(const ChartMarker& m) {
    std::string out;
    for (size_t i = 0; i < m.level_labels.size(); ++i) {
        if (i > 0) out += "|";
        out += m.level_labels[i];
    }
    return out;
}

}  // namespace

std::string chart_text(const ChartData& chart) {
    std::ostringstream out;
    out << "slice filtration chart for C_" << chart.spec.order() << " (p=" << chart.spec.p
        << ", n=" << chart.spec.n << "), stem 0\n";
    out << "filtration | layer (levels 0.." << chart.spec.n << ")\n";
    size_t width = 0;
    for (const ChartMarker& m : chart.markers)
        width = std::max(width, std::to_string(m.filtration).size());
    for (auto it = chart.markers.rbegin(); it != chart.markers.rend(); ++it) {
        std::string f = std::to_string(it->filtration);
        out << std::string(width > f.size() ? width - f.size() : 0, ' ') << f << " | * "
            << joined_labels(*it) << "\n";
    }
    return out.str();
}

std::string chart_svg(const ChartData& chart) {
    const long row_height = 24, left = 70, top = 30, text_gap = 14;
    long max_f = 0;
    for (const ChartMarker& m : chart.markers) max_f = std::max(max_f, m.filtration);
    const long height = top * 2 + row_height * (max_f + 1);
    const long width = 420;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    out << "<text x=\"8\" y=\"16\" font-size=\"12\">slice filtration chart for C_"
        << chart.spec.order() << ", stem 0</text>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << (height - top / 2) << "\" stroke=\"black\"/>\n";
    for (const ChartMarker& m : chart.markers) {
        long y = top + row_height * (max_f - m.filtration) + row_height / 2;
        out << "<text x=\"8\" y=\"" << (y + 4) << "\" font-size=\"11\">f=" << m.filtration
            << "</text>\n";
        out << "<circle cx=\"" << (left + 30) << "\" cy=\"" << y
            << "\" r=\"4\" fill=\"black\"/>\n";
        out << "<text x=\"" << (left + 30 + text_gap) << "\" y=\"" << (y + 4)
            << "\" font-size=\"11\">" << joined_labels(m) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace coslice
