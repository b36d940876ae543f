#include "sidi/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace sidi {
namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool parse_int(const std::string& tok, int& out) {
  std::size_t pos = 0;
  try {
    const long v = std::stol(tok, &pos);
    if (pos != tok.size() || v < -2147483647L || v > 2147483647L) return false;
    out = static_cast<int>(v);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string class_name(const OrderingSequence& seq) {
  if (seq.sign_class == SignClass::SameSign) return "same-sign";
  return seq.floating_excluded ? "mixed-sign, floating pairs excluded" : "mixed-sign";
}

}  // namespace

SignedDigraph parse_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<Arc> arcs;
  std::vector<int> arc_lines;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ss(strip_comment(raw));
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n" || !parse_int(tok[1], n) || n < 1)
        throw ParseError(line_no, "expected header 'n <vertex count>'");
      continue;
    }
    if (tok.size() != 3) throw ParseError(line_no, "expected 'tail head sign'");
    int tail = 0, head = 0, sign = 0;
    if (!parse_int(tok[0], tail) || !parse_int(tok[1], head))
      throw ParseError(line_no, "vertex ids must be integers");
    if (!parse_int(tok[2], sign) || (sign != 1 && sign != -1))
      throw ParseError(line_no, "sign must be +1 or -1");
    if (tail < 0 || tail >= n || head < 0 || head >= n)
      throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (tail == head) throw ParseError(line_no, "self-loops are not allowed");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (arcs[i].tail == tail && arcs[i].head == head)
        throw ParseError(line_no, "duplicate arc (first on line " + std::to_string(arc_lines[i]) + ")");
    }
    arcs.push_back({tail, head, sign > 0 ? Sign::Positive : Sign::Negative});
    arc_lines.push_back(line_no);
  }
  if (n < 0) throw ParseError(line_no + 1, "missing header 'n <vertex count>'");
  return {n, std::move(arcs)};
}

SignedDigraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const SignedDigraph& g) {
  out << "n " << g.n_vertices() << '\n';
  for (const Arc& a : g.arcs())
    out << a.tail << ' ' << a.head << ' ' << (a.sign == Sign::Positive ? "+1" : "-1") << '\n';
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void write_ordering_csv(std::ostream& out, const OrderingSequence& seq) {
  out << "rank,tie_group,c1_len,c1_sign,c2_len,c2_sign,value\n";
  for (const OrderingEntry& e : seq.entries) {
    out << e.rank << ',' << e.tie_group << ',' << e.pair.c1().length << ','
        << sign_char(e.pair.c1().sign) << ',' << e.pair.c2().length << ','
        << sign_char(e.pair.c2().sign) << ',' << fixed6(e.value) << '\n';
  }
}

void write_ordering_text(std::ostream& out, const OrderingSequence& seq) {
  out << "iota-energy ordering, n = " << seq.budget_n << ", " << class_name(seq) << '\n';
  out << "ties grouped within the comparator tolerance; order inside a tie group is\n"
         "total length descending, then first cycle length ascending\n";
  int prev_group = 0;
  for (const OrderingEntry& e : seq.entries) {
    const char* rel = e.rank == 1 ? "  " : (e.tie_group == prev_group ? "= " : "> ");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%4d  ", e.rank);
    out << buf << rel << e.pair.label() << "  " << fixed6(e.value) << '\n';
    prev_group = e.tie_group;
  }
}

void write_ordering_svg(std::ostream& out, const OrderingSequence& seq) {
  constexpr double kWidth = 960, kHeight = 540;
  constexpr double kLeft = 70, kRight = 30, kTop = 50, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  const std::size_t count = seq.entries.size();
  double vmax = 0.0;
  for (const auto& e : seq.entries) vmax = std::max(vmax, e.value);
  const double ytick = vmax > 20 ? 5.0 : (vmax > 8 ? 2.0 : 1.0);
  const double ymax = std::max(ytick, std::ceil(vmax / ytick) * ytick);

  auto x_of = [&](double rank) {
    return count <= 1 ? kLeft + plot_w / 2 : kLeft + (rank - 1.0) / double(count - 1) * plot_w;
  };
  auto y_of = [&](double v) { return kTop + plot_h - v / ymax * plot_h; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt2(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">Iota energy ordering, n = "
      << seq.budget_n << " (" << xml_escape(class_name(seq)) << ")</text>\n";

  out << "<g stroke=\"#dddddd\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double v = 0.0; v <= ymax + 1e-9; v += ytick) {
    out << "<line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(y_of(v)) << "\" x2=\""
        << fmt2(kLeft + plot_w) << "\" y2=\"" << fmt2(y_of(v)) << "\"/>\n";
    out << "<text x=\"" << fmt2(kLeft - 8) << "\" y=\"" << fmt2(y_of(v) + 4)
        << "\" text-anchor=\"end\" stroke=\"none\" fill=\"#333333\">" << fmt2(v) << "</text>\n";
  }
  const std::size_t xstep = count > 40 ? 10 : (count > 10 ? 5 : 1);
  for (std::size_t r = 1; r <= count; ++r) {
    if (r != 1 && r % xstep != 0) continue;
    out << "<text x=\"" << fmt2(x_of(double(r))) << "\" y=\"" << fmt2(kTop + plot_h + 18)
        << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333333\">" << r << "</text>\n";
  }
  out << "</g>\n";
  out << "<g stroke=\"#333333\" stroke-width=\"1.5\">\n"
      << "<line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kTop) << "\" x2=\"" << fmt2(kLeft)
      << "\" y2=\"" << fmt2(kTop + plot_h) << "\"/>\n"
      << "<line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kTop + plot_h) << "\" x2=\""
      << fmt2(kLeft + plot_w) << "\" y2=\"" << fmt2(kTop + plot_h) << "\"/>\n</g>\n";
  out << "<text x=\"" << fmt2(kLeft + plot_w / 2) << "\" y=\"" << fmt2(kHeight - 14)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">rank</text>\n";
  out << "<text x=\"18\" y=\"" << fmt2(kTop + plot_h / 2) << "\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 "
      << fmt2(kTop + plot_h / 2) << ")\">iota energy</text>\n";

  // One marker per tie group, at the mean rank of its members.
  struct Group {
    int first_rank, last_rank;
    double value;
    std::string labels;
  };
  std::vector<Group> groups;
  for (const auto& e : seq.entries) {
    if (!groups.empty() && groups.back().last_rank + 1 == e.rank &&
        seq.entries[static_cast<std::size_t>(groups.back().last_rank - 1)].tie_group == e.tie_group) {
      groups.back().last_rank = e.rank;
      groups.back().labels += " = " + e.pair.label();
    } else {
      groups.push_back({e.rank, e.rank, e.value, e.pair.label()});
    }
  }

  out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.2\" points=\"";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const double cx = x_of((groups[i].first_rank + groups[i].last_rank) / 2.0);
    out << (i ? " " : "") << fmt2(cx) << ',' << fmt2(y_of(groups[i].value));
  }
  out << "\"/>\n";

  out << "<g fill=\"#1f77b4\" stroke=\"#0b3d66\" stroke-width=\"0.8\">\n";
  for (const Group& g : groups) {
    const double y = y_of(g.value);
    if (g.last_rank > g.first_rank) {
      out << "<line x1=\"" << fmt2(x_of(g.first_rank)) << "\" y1=\"" << fmt2(y) << "\" x2=\""
          << fmt2(x_of(g.last_rank)) << "\" y2=\"" << fmt2(y)
          << "\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";
    }
    const double cx = x_of((g.first_rank + g.last_rank) / 2.0);
    out << "<circle cx=\"" << fmt2(cx) << "\" cy=\"" << fmt2(y) << "\" r=\""
        << (g.last_rank > g.first_rank ? "5" : "3.5") << "\"><title>" << xml_escape(g.labels)
        << ' ' << fixed6(g.value) << "</title></circle>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace sidi
