#include "omc/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace omc {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& message) {
    fail(ErrorKind::io, name + ":" + std::to_string(line) + ": " + message);
}

std::string strip(const std::string& raw) {
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto is_space = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && is_space(static_cast<unsigned char>(s[start]))) ++start;
    return s.substr(start);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

int parse_int_field(const std::string& token, const std::string& key, const std::string& name,
                    int line) {
    if (token.rfind(key + "=", 0) != 0)
        parse_fail(name, line, "expected " + key + "=<int>, got '" + token + "'");
    try {
        return std::stoi(token.substr(key.size() + 1));
    } catch (const std::exception&) {
        parse_fail(name, line, "invalid integer in '" + token + "'");
    }
}

ElementSet parse_label_list(const std::string& text, int m, const std::string& name, int line) {
    ElementSet set;
    for (int e : parse_index_list(text)) {
        if (e < 1 || e > m) parse_fail(name, line, "label element " + std::to_string(e) +
                                                       " outside [1," + std::to_string(m) + "]");
        set.insert(e);
    }
    return set;
}

} // namespace

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream iss(text);
    while (std::getline(iss, item, ',')) {
        if (item.empty()) fail(ErrorKind::domain, "empty entry in index list '" + text + "'");
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            fail(ErrorKind::domain, "invalid index '" + item + "' in list");
        }
    }
    if (out.empty()) fail(ErrorKind::domain, "empty index list");
    return out;
}

std::string comma_join(const std::vector<int>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values[i]);
    }
    return s;
}

MatroidFile read_matroid_file(std::istream& in, const std::string& name) {
    MatroidFile file;
    bool have_header = false;
    int line_no = 0;
    std::string raw;
    std::vector<std::string> seen_rows;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty()) continue;
        std::vector<std::string> tokens = split_ws(line);

        if (!have_header) {
            if (tokens.size() < 3 || tokens[0] != "om")
                parse_fail(name, line_no, "expected header 'om <kind> m=<int> ...'");
            if (tokens[1] == "topes") file.kind = MatroidFile::Kind::topes;
            else if (tokens[1] == "covectors") file.kind = MatroidFile::Kind::covectors;
            else if (tokens[1] == "realization") file.kind = MatroidFile::Kind::realization;
            else parse_fail(name, line_no, "unknown record kind '" + tokens[1] + "'");
            file.m = parse_int_field(tokens[2], "m", name, line_no);
            if (file.m < 1) parse_fail(name, line_no, "m must be positive");
            if (file.m > kMaxGroundSetSize)
                fail(ErrorKind::resource, name + ":" + std::to_string(line_no) +
                                              ": m exceeds capacity " +
                                              std::to_string(kMaxGroundSetSize));
            if (file.kind == MatroidFile::Kind::realization) {
                if (tokens.size() < 4)
                    parse_fail(name, line_no, "realization header needs r=<int>");
                Realization r;
                r.m = file.m;
                r.dim = parse_int_field(tokens[3], "r", name, line_no);
                if (r.dim < 1) parse_fail(name, line_no, "r must be positive");
                file.realization = std::move(r);
            }
            have_header = true;
            continue;
        }

        if (tokens[0] == "labels") {
            if (file.minus_labels || file.plus_labels)
                parse_fail(name, line_no, "duplicate labels line");
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (tokens[i].rfind("-=", 0) == 0)
                    file.minus_labels = parse_label_list(tokens[i].substr(2), file.m, name, line_no);
                else if (tokens[i].rfind("+=", 0) == 0)
                    file.plus_labels = parse_label_list(tokens[i].substr(2), file.m, name, line_no);
                else
                    parse_fail(name, line_no, "labels entries must be -=<list> or +=<list>");
            }
            if (!file.minus_labels || !file.plus_labels)
                parse_fail(name, line_no, "labels line needs both -= and +=");
            if (file.minus_labels->intersects(*file.plus_labels))
                parse_fail(name, line_no, "labels assign an element to both classes");
            if (file.minus_labels->count() + file.plus_labels->count() != file.m)
                parse_fail(name, line_no, "labels must cover every element exactly once");
            continue;
        }

        if (file.kind == MatroidFile::Kind::realization) {
            if (static_cast<int>(tokens.size()) != file.realization->dim)
                parse_fail(name, line_no, "expected " + std::to_string(file.realization->dim) +
                                              " rationals, got " +
                                              std::to_string(tokens.size()));
            RationalVector row;
            for (const auto& t : tokens) row.push_back(parse_rational(t));
            file.realization->rows.push_back(std::move(row));
            if (std::find(seen_rows.begin(), seen_rows.end(), line) != seen_rows.end())
                parse_fail(name, line_no, "duplicate record '" + line + "'");
            seen_rows.push_back(line);
            continue;
        }

        if (tokens.size() != 1)
            parse_fail(name, line_no, "expected one sign vector per line");
        if (static_cast<int>(tokens[0].size()) != file.m)
            parse_fail(name, line_no, "expected length " + std::to_string(file.m) + ", got " +
                                          std::to_string(tokens[0].size()));
        SignVector v;
        try {
            v = SignVector::parse(tokens[0]);
        } catch (const Error& e) {
            parse_fail(name, line_no, e.what());
        }
        if (std::find(file.rows.begin(), file.rows.end(), v) != file.rows.end())
            parse_fail(name, line_no, "duplicate record '" + tokens[0] + "'");
        file.rows.push_back(v);
    }
    if (!have_header) fail(ErrorKind::io, name + ": missing 'om' header");
    if (file.kind == MatroidFile::Kind::realization) {
        if (static_cast<int>(file.realization->rows.size()) != file.m)
            fail(ErrorKind::io, name + ": realization lists " +
                                    std::to_string(file.realization->rows.size()) +
                                    " rows but declares m=" + std::to_string(file.m));
    } else if (file.rows.empty()) {
        fail(ErrorKind::io, name + ": no records");
    }
    return file;
}

OrientedMatroid matroid_from_file(const MatroidFile& file) {
    switch (file.kind) {
    case MatroidFile::Kind::topes:
        return OrientedMatroid::from_topes(file.rows, TopeTrust::trusted);
    case MatroidFile::Kind::covectors:
        return OrientedMatroid::from_covectors(file.rows);
    case MatroidFile::Kind::realization:
        return OrientedMatroid::from_realization(*file.realization);
    }
    fail(ErrorKind::internal, "corrupt matroid file kind");
}

void write_tope_file(std::ostream& out, const OrientedMatroid& m) {
    out << "om topes m=" << m.ground_size() << "\n";
    for (const auto& t : m.topes()) out << t.str() << "\n";
}

void write_committee_file(std::ostream& out, const std::vector<SignVector>& members) {
    std::vector<SignVector> sorted = members;
    canonicalize(sorted);
    for (const auto& k : sorted) out << k.str() << "\n";
}

std::vector<SignVector> read_sign_vector_file(std::istream& in, const std::string& name) {
    std::vector<SignVector> out;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty()) continue;
        try {
            out.push_back(SignVector::parse(line));
        } catch (const Error& e) {
            parse_fail(name, line_no, e.what());
        }
    }
    if (out.empty()) fail(ErrorKind::io, name + ": no sign vectors");
    return out;
}

void write_chain_file(std::ostream& out, const MaximalChain& chain) {
    out << chain.topes.front().str() << "\n";
    for (std::size_t i = 1; i < chain.topes.size(); ++i)
        out << chain.topes[i].str() << " " << chain.labels[i - 1] << "\n";
}

std::vector<SignVector> read_chain_file(std::istream& in, const std::string& name) {
    std::vector<SignVector> topes;
    std::vector<std::optional<int>> labels;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty()) continue;
        std::vector<std::string> tokens = split_ws(line);
        if (tokens.size() > 2) parse_fail(name, line_no, "expected '<tope> [label]'");
        try {
            topes.push_back(SignVector::parse(tokens[0]));
        } catch (const Error& e) {
            parse_fail(name, line_no, e.what());
        }
        if (tokens.size() == 2) {
            try {
                labels.push_back(std::stoi(tokens[1]));
            } catch (const std::exception&) {
                parse_fail(name, line_no, "invalid label '" + tokens[1] + "'");
            }
        } else {
            labels.push_back(std::nullopt);
        }
    }
    if (topes.empty()) fail(ErrorKind::io, name + ": empty chain");
    // Declared labels, when present, must match the separation sets.
    for (std::size_t i = 1; i < topes.size(); ++i) {
        if (!labels[i]) continue;
        ElementSet sep = topes[i - 1].separation_set(topes[i]);
        if (sep.count() != 1 || sep.elements().front() != *labels[i])
            fail(ErrorKind::validation, name + ": declared label " +
                                            std::to_string(*labels[i]) +
                                            " does not match chain step " + std::to_string(i));
    }
    return topes;
}

std::vector<Sign> read_sigma_file(std::istream& in, const std::string& name,
                                  const OrientedMatroid& m) {
    const auto& cocircuits = m.cocircuits();
    std::vector<std::optional<Sign>> assigned(cocircuits.size());
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty()) continue;
        std::vector<std::string> tokens = split_ws(line);
        if (tokens.size() != 2 || tokens[1].size() != 1)
            parse_fail(name, line_no, "expected '<cocircuit> <sign>'");
        SignVector y;
        Sign s{};
        try {
            y = SignVector::parse(tokens[0]);
            s = sign_from_char(tokens[1][0]);
        } catch (const Error& e) {
            parse_fail(name, line_no, e.what());
        }
        auto it = std::lower_bound(cocircuits.begin(), cocircuits.end(), y, CanonicalLess{});
        if (it == cocircuits.end() || !(*it == y))
            parse_fail(name, line_no, tokens[0] + " is not a cocircuit of the input matroid");
        std::size_t idx = static_cast<std::size_t>(it - cocircuits.begin());
        if (assigned[idx] && *assigned[idx] != s)
            parse_fail(name, line_no, "conflicting signs for " + tokens[0]);
        assigned[idx] = s;
    }
    // Fill opposites by antisymmetry, then require totality.
    for (std::size_t i = 0; i < cocircuits.size(); ++i) {
        if (!assigned[i]) continue;
        SignVector opp = cocircuits[i].negated();
        auto it = std::lower_bound(cocircuits.begin(), cocircuits.end(), opp, CanonicalLess{});
        std::size_t j = static_cast<std::size_t>(it - cocircuits.begin());
        if (assigned[j] && *assigned[j] != opposite(*assigned[i]))
            fail(ErrorKind::validation, name + ": localization is not antisymmetric at " +
                                            cocircuits[i].str());
        assigned[j] = opposite(*assigned[i]);
    }
    std::vector<Sign> sigma;
    for (std::size_t i = 0; i < cocircuits.size(); ++i) {
        if (!assigned[i])
            fail(ErrorKind::validation,
                 name + ": no sign assigned to cocircuit " + cocircuits[i].str());
        sigma.push_back(*assigned[i]);
    }
    return sigma;
}

} // namespace omc
