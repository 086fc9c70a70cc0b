#pragma once

// Synthetic corpus generators: a pseudo-English text stream whose
// within-word transitions are near-deterministic (so the space character
// carries high next-character entropy), and multi-topic corpora with a
// shared stopword vocabulary for classification/noise experiments.

#include <array>
#include <random>
#include <string>
#include <vector>

namespace ngg::testsupport {

// Words follow a fixed successor chain: each letter is always followed by
// the same next letter inside a word, so letter contexts have low entropy
// while the space context sees many distinct word-initial letters.
class PseudoEnglish {
public:
    explicit PseudoEnglish(unsigned seed) : rng_(seed) {
        std::array<char, 26> succ{};
        for (int i = 0; i < 26; ++i) succ[static_cast<std::size_t>(i)] =
            static_cast<char>('a' + (i * 7 + 3) % 26);
        std::uniform_int_distribution<int> start('a', 'z');
        std::uniform_int_distribution<int> len(2, 7);
        for (int i = 0; i < 60; ++i) {
            std::string word(1, static_cast<char>(start(rng_)));
            const int target = len(rng_);
            while (static_cast<int>(word.size()) < target)
                word.push_back(succ[static_cast<std::size_t>(word.back() - 'a')]);
            vocabulary_.push_back(word);
        }
    }

    const std::vector<std::string>& vocabulary() const { return vocabulary_; }

    std::string word() {
        std::uniform_int_distribution<std::size_t> pick(0, vocabulary_.size() - 1);
        return vocabulary_[pick(rng_)];
    }

    // `words` whitespace-separated words grouped into short sentences.
    std::string text(int words) {
        std::string out;
        int in_sentence = 0;
        for (int i = 0; i < words; ++i) {
            if (!out.empty()) out += ' ';
            out += word();
            if (++in_sentence >= 8) {
                out += '.';
                in_sentence = 0;
            }
        }
        if (!out.empty() && out.back() != '.') out += '.';
        return out;
    }

private:
    std::mt19937 rng_;
    std::vector<std::string> vocabulary_;
};

// Topic corpora over disjoint letter ranges plus one shared stopword
// vocabulary, mimicking the stopword-effect edges that show up as
// cross-topic noise.
struct SyntheticTopics {
    std::vector<std::vector<std::string>> docs_per_topic;
};

inline std::vector<std::string> chain_vocabulary(std::mt19937& rng, char lo, char hi,
                                                 int count, int min_len = 3, int max_len = 6) {
    const int span = hi - lo + 1;
    std::uniform_int_distribution<int> start(0, span - 1);
    std::uniform_int_distribution<int> len(min_len, max_len);
    std::vector<std::string> vocab;
    vocab.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        int c = start(rng);
        std::string word(1, static_cast<char>(lo + c));
        const int target = len(rng);
        while (static_cast<int>(word.size()) < target) {
            c = (c * 5 + 1) % span;
            word.push_back(static_cast<char>(lo + c));
        }
        vocab.push_back(word);
    }
    return vocab;
}

// `stopword_ratio` of each document's tokens come from the shared
// vocabulary; the rest from the topic's own vocabulary. Topic alphabets
// start `alphabet_step` letters apart over a 4-letter span, so a step
// below 4 makes neighbouring topics share letters and confusable.
inline SyntheticTopics make_synthetic_topics(unsigned seed, int topics = 5,
                                             int docs_per_topic = 10, int words_per_doc = 40,
                                             double stopword_ratio = 0.94,
                                             int alphabet_step = 4, int stopword_count = 8,
                                             int topic_vocab = 6) {
    std::mt19937 rng(seed);
    const std::vector<std::string> stopwords = chain_vocabulary(rng, 'a', 'f', stopword_count, 2, 4);

    std::vector<std::vector<std::string>> topic_vocabs;
    for (int t = 0; t < topics; ++t) {
        const char lo = static_cast<char>('g' + t * alphabet_step);
        topic_vocabs.push_back(chain_vocabulary(rng, lo, static_cast<char>(lo + 3), topic_vocab));
    }

    SyntheticTopics out;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int t = 0; t < topics; ++t) {
        std::vector<std::string> docs;
        std::uniform_int_distribution<std::size_t> pick_stop(0, stopwords.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_topic(0, topic_vocabs[static_cast<std::size_t>(t)].size() - 1);
        for (int d = 0; d < docs_per_topic; ++d) {
            std::string text;
            for (int w = 0; w < words_per_doc; ++w) {
                if (!text.empty()) text += ' ';
                if (coin(rng) < stopword_ratio)
                    text += stopwords[pick_stop(rng)];
                else
                    text += topic_vocabs[static_cast<std::size_t>(t)][pick_topic(rng)];
            }
            text += '.';
            docs.push_back(std::move(text));
        }
        out.docs_per_topic.push_back(std::move(docs));
    }
    return out;
}

} // namespace ngg::testsupport
