#include "bpglab/json_io.hpp"

#include <map>

#include "bpglab/graph_io.hpp"
#include "json.hpp"

namespace bpglab {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw FormatError("invalid JSON");
    return j;
}

}  // namespace

std::string letter_system_to_json(const LetterSystem& sys) {
    sys.validate();
    json j;
    j["alphabet"] = sys.alphabet;
    json dec = json::array();
    for (auto [x, y] : sys.decoder) dec.push_back({sys.alphabet[x], sys.alphabet[y]});
    j["decoder"] = dec;
    json word = json::array();
    for (int w : sys.word) word.push_back(sys.alphabet[w]);
    j["word"] = word;
    if (!sys.vertex_map.empty()) j["vertex_map"] = sys.vertex_map;
    return j.dump() + "\n";
}

LetterSystem letter_system_from_json(const std::string& text) {
    json j = parse(text);
    LetterSystem sys;
    try {
        sys.alphabet = j.at("alphabet").get<std::vector<std::string>>();
        std::map<std::string, int> index;
        for (std::size_t i = 0; i < sys.alphabet.size(); ++i)
            index[sys.alphabet[i]] = static_cast<int>(i);
        if (index.size() != sys.alphabet.size()) throw FormatError("duplicate alphabet letter");
        auto look = [&](const std::string& s) {
            auto it = index.find(s);
            if (it == index.end()) throw FormatError("letter '" + s + "' not in alphabet");
            return it->second;
        };
        for (const auto& pair : j.at("decoder")) {
            if (!pair.is_array() || pair.size() != 2) throw FormatError("bad decoder pair");
            sys.decoder.emplace_back(look(pair.at(0).get<std::string>()),
                                     look(pair.at(1).get<std::string>()));
        }
        for (const auto& w : j.at("word")) sys.word.push_back(look(w.get<std::string>()));
        if (j.contains("vertex_map")) sys.vertex_map = j.at("vertex_map").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("letter system JSON: ") + e.what());
    }
    sys.validate();
    return sys;
}

std::string kgraph_to_json(const KGraph& k) {
    k.validate();
    json j;
    j["k"] = k.k;
    json edges = json::array();
    for (auto [a, b] : k.edges) edges.push_back({a, b});
    j["edges"] = edges;
    return j.dump() + "\n";
}

KGraph kgraph_from_json(const std::string& text) {
    json j = parse(text);
    KGraph k;
    try {
        k.k = j.at("k").get<int>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw FormatError("bad edge");
            k.add(e.at(0).get<int>(), e.at(1).get<int>());
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("kgraph JSON: ") + e.what());
    }
    return k;
}

std::string word_source_to_json(const WordSource& src) {
    src.validate();
    json j;
    j["alphabet"] = src.alphabet;
    auto pack = [&](const std::vector<int>& seq) {
        std::string out;
        for (int l : seq) {
            if (src.alphabet[l].size() != 1)
                throw FormatError("word source letters must be single characters");
            out += src.alphabet[l];
        }
        return out;
    };
    j["prefix"] = pack(src.prefix);
    j["period"] = pack(src.period);
    return j.dump() + "\n";
}

WordSource word_source_from_json(const std::string& text) {
    json j = parse(text);
    WordSource src;
    try {
        src.alphabet = j.at("alphabet").get<std::vector<std::string>>();
        std::map<std::string, int> index;
        for (std::size_t i = 0; i < src.alphabet.size(); ++i)
            index[src.alphabet[i]] = static_cast<int>(i);
        auto unpack = [&](const std::string& s, std::vector<int>& out) {
            for (char c : s) {
                auto it = index.find(std::string(1, c));
                if (it == index.end())
                    throw FormatError(std::string("letter '") + c + "' not in alphabet");
                out.push_back(it->second);
            }
        };
        unpack(j.at("prefix").get<std::string>(), src.prefix);
        unpack(j.at("period").get<std::string>(), src.period);
    } catch (const json::exception& e) {
        throw FormatError(std::string("word source JSON: ") + e.what());
    }
    src.validate();
    return src;
}

}  // namespace bpglab
