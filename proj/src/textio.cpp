#include "torsioncap/textio.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace torsioncap {

std::string compact_ranges(const std::vector<Int>& v) {
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < v.size()) {
        size_t j = i;
        while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
        if (!first) os << ",";
        first = false;
        if (j - i >= 2) {
            os << v[i].get_str() << "-" << v[j].get_str();
        } else if (j == i + 1) {
            os << v[i].get_str() << "," << v[j].get_str();
        } else {
            os << v[i].get_str();
        }
        i = j + 1;
    }
    return os.str();
}

std::string render_degseq(const std::vector<unsigned>& degrees) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (i) os << ",";
        os << degrees[i];
    }
    os << ")";
    return os.str();
}

std::string render_degseq_row(const std::string& label,
                              const std::vector<std::vector<unsigned>>& entries) {
    std::ostringstream os;
    os << label << ": ";
    size_t i = 0;
    bool first = true;
    while (i < entries.size()) {
        size_t j = i;
        while (j + 1 < entries.size() && entries[j + 1] == entries[i]) ++j;
        if (!first) os << ", ";
        first = false;
        os << render_degseq(entries[i]);
        if (j > i) os << "^" << (j - i + 1);
        i = j + 1;
    }
    return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("write_atomic: cannot open " + tmp);
        out << content;
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw std::runtime_error("write_atomic: write failed for " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("write_atomic: rename failed for " + path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_file: cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

struct Term {
    Rat coef;
    unsigned exp;
};

Rat parse_rat_token(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

Term parse_term(const std::string& t, const std::string& var) {
    std::string s = t;
    Rat coef(1);
    size_t vpos = s.find(var);
    if (vpos == std::string::npos) {
        return {parse_rat_token(s), 0};
    }
    std::string pre = s.substr(0, vpos);
    std::string post = s.substr(vpos + var.size());
    if (!pre.empty()) {
        if (pre.back() == '*') pre.pop_back();
        if (!pre.empty()) coef = parse_rat_token(pre);
    }
    unsigned exp = 1;
    if (!post.empty()) {
        if (post[0] != '^') throw std::domain_error("parse_qpoly: bad term '" + t + "'");
        exp = static_cast<unsigned>(std::stoul(post.substr(1)));
    }
    return {coef, exp};
}

} // namespace

QPoly parse_qpoly(const std::string& text, const std::string& var) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw std::domain_error("parse_qpoly: empty input");
    std::vector<std::string> terms;
    std::string cur;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^' && s[i - 1] != '*' &&
            s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-') {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(ch);
    }
    terms.push_back(cur);
    std::vector<Rat> coeffs;
    for (const auto& t : terms) {
        if (t.empty()) continue;
        std::string body = t;
        Rat sign(1);
        if (body[0] == '+') {
            body = body.substr(1);
        } else if (body[0] == '-') {
            sign = Rat(-1);
            body = body.substr(1);
        }
        if (body.empty()) throw std::domain_error("parse_qpoly: dangling sign");
        Term term = parse_term(body, var);
        if (coeffs.size() <= term.exp) coeffs.resize(term.exp + 1, Rat(0));
        coeffs[term.exp] += sign * term.coef;
    }
    return QPoly(std::move(coeffs));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace torsioncap
