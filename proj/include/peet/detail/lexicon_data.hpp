/*
 * Copyright 2026 The PEET Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Word tables behind the fallback annotator. Base forms only; regular
// inflections are generated in lexicon.hpp.

#include <string_view>

namespace peet::lexicon::data {

inline constexpr std::string_view kDeterminers[] = {
    "a", "an", "the", "this", "that", "these", "those", "my", "your", "his", "her", "its", "our",
    "their", "some", "any", "no", "every", "each", "all", "both", "either", "neither", "many",
    "much", "few", "several", "another", "such", "what", "which", "whose", "whatever", "other",
};

inline constexpr std::string_view kPrepositions[] = {
    "of", "in", "on", "at", "by", "for", "with", "about", "against", "between", "into", "through",
    "during", "before", "after", "above", "below", "from", "up", "down", "over", "under", "around",
    "among", "across", "along", "behind", "beside", "besides", "beyond", "near", "off", "onto",
    "toward", "towards", "upon", "within", "without", "throughout", "despite", "except", "inside",
    "outside", "until", "till", "via", "per", "amid", "underneath", "past", "unlike",
};

inline constexpr std::string_view kPronouns[] = {
    "i", "me", "you", "he", "him", "she", "it", "we", "us", "they", "them", "myself", "yourself",
    "himself", "herself", "itself", "ourselves", "yourselves", "themselves", "mine", "yours",
    "hers", "ours", "theirs", "who", "whom", "someone", "anyone", "everyone", "nobody", "somebody",
    "anybody", "everybody", "everything", "something", "anything", "nothing", "whoever",
    "none", "oneself",
};

inline constexpr std::string_view kConjunctions[] = {
    "and", "or", "but", "nor", "so", "yet", "because", "although", "though", "while", "if",
    "unless", "whereas", "whether", "than", "since", "once", "whenever", "wherever", "as",
};

inline constexpr std::string_view kParticles[] = {"to", "not"};

inline constexpr std::string_view kContractions[] = {"'s", "n't", "'ve", "'ll", "'re", "'m", "'d"};

/// Contraction token and the full forms it may stand for.
struct Expansion {
  std::string_view contraction;
  std::string_view expansion;
};

inline constexpr Expansion kExpansions[] = {
    {"'s", "is"},     {"'s", "has"},  {"'s", "us"},    {"n't", "not"},  {"'ve", "have"},
    {"'ll", "will"},  {"'ll", "shall"}, {"'re", "are"}, {"'m", "am"},    {"'d", "would"},
    {"'d", "had"},    {"'d", "did"},  {"ca", "can"},   {"wo", "will"},
};

inline constexpr std::string_view kAdverbs[] = {
    "very", "too", "also", "just", "only", "even", "still", "already", "often", "always", "never",
    "sometimes", "soon", "now", "here", "there", "then", "again", "almost", "quite", "rather",
    "ever", "perhaps", "maybe", "well", "together", "away", "later", "today", "tomorrow",
    "yesterday", "enough", "instead", "however", "therefore", "indeed", "else", "anyway", "twice",
    "ago", "abroad", "moreover", "furthermore", "nevertheless", "meanwhile", "otherwise", "thus",
    "hence", "somewhere", "anywhere", "everywhere", "nowhere", "forward", "ahead", "apart",
    "aside", "seldom", "tonight", "recently", "yes", "how", "when", "where", "why", "so-called",
    "afterwards", "overseas", "downstairs", "upstairs", "indoors", "outdoors", "everyday",
};

/// Modal auxiliaries; tagged VERB with themselves as lemma.
inline constexpr std::string_view kModals[] = {
    "will", "would", "can", "could", "shall", "should", "may", "might", "must", "ought",
};

inline constexpr std::string_view kNouns[] = {
    "time", "year", "way", "day", "thing", "world", "life", "hand", "part", "place", "case",
    "week", "company", "system", "program", "question", "work", "government", "number", "night",
    "point", "home", "water", "room", "mother", "area", "money", "story", "fact", "month", "lot",
    "right", "study", "book", "eye", "job", "word", "business", "issue", "side", "kind", "head",
    "house", "service", "friend", "father", "power", "hour", "game", "line", "end", "member",
    "law", "car", "city", "community", "name", "president", "team", "minute", "idea", "kid",
    "body", "information", "back", "parent", "face", "level", "office", "door", "health",
    "person", "art", "war", "history", "party", "result", "change", "morning", "reason",
    "research", "girl", "guy", "moment", "air", "teacher", "force", "education", "boy", "age",
    "policy", "process", "music", "market", "sense", "nation", "plan", "college", "interest",
    "death", "experience", "effect", "class", "control", "care", "field", "development", "role",
    "effort", "rate", "heart", "drug", "show", "leader", "light", "voice", "police", "mind",
    "price", "report", "decision", "son", "daughter", "view", "relationship", "town", "road",
    "arm", "difference", "value", "building", "action", "model", "season", "society", "tax",
    "director", "position", "player", "record", "paper", "space", "ground", "form", "event",
    "official", "matter", "center", "couple", "site", "project", "activity", "star", "table",
    "need", "court", "oil", "situation", "cost", "industry", "figure", "street", "image", "phone",
    "data", "picture", "practice", "piece", "land", "product", "doctor", "wall", "patient",
    "worker", "news", "test", "movie", "north", "south", "east", "west", "love", "support",
    "technology", "step", "baby", "computer", "type", "attention", "film", "tree", "source",
    "organization", "hair", "window", "evidence", "population", "problem", "concern", "dog",
    "cat", "animal", "student", "school", "country", "family", "group", "state", "behaviour",
    "behavior", "environment", "opinion", "advice", "knowledge", "sentence", "error",
    "correction", "editor", "language", "text", "letter", "email", "meeting", "solution",
    "benefit", "future", "weather", "train", "bus", "apple", "food", "dinner", "lunch",
    "breakfast", "garden", "park", "river", "lake", "sea", "mountain", "forest", "flower",
    "bird", "horse", "cow", "fish", "sheep", "chair", "bed", "kitchen", "bread", "cake", "tea",
    "coffee", "milk", "egg", "meat", "rice", "fruit", "box", "bag", "key", "pen", "pencil",
    "desk", "lesson", "exam", "university", "class", "homework", "subject", "topic", "article",
    "essay", "paragraph", "grammar", "spelling", "vocabulary", "dictionary", "library", "museum",
    "hospital", "hotel", "restaurant", "shop", "store", "supermarket", "bank", "church",
    "airport", "station", "bridge", "village", "island", "beach", "sun", "moon", "sky", "rain",
    "snow", "wind", "winter", "summer", "spring", "autumn", "holiday", "vacation", "trip",
    "journey", "ticket", "passport", "plane", "ship", "boat", "bike", "bicycle", "taxi",
    "traffic", "accident", "danger", "safety", "crime", "prison", "army", "soldier", "peace",
    "freedom", "right", "duty", "rule", "order", "example", "answer", "choice", "chance",
    "opportunity", "advantage", "disadvantage", "purpose", "goal", "aim", "success", "failure",
    "mistake", "fault", "truth", "lie", "secret", "dream", "hope", "fear", "anger", "joy",
    "pleasure", "pain", "illness", "disease", "medicine", "treatment", "energy", "pollution",
    "climate", "nature", "planet", "earth", "universe", "science", "scientist", "engineer",
    "lawyer", "manager", "customer", "client", "employee", "employer", "boss", "colleague",
    "neighbour", "neighbor", "stranger", "guest", "host", "owner", "citizen", "adult",
    "teenager", "husband", "brother", "sister", "uncle", "aunt", "cousin", "grandmother",
    "grandfather", "generation", "culture", "tradition", "religion", "festival", "party",
    "wedding", "birthday", "gift", "present", "price", "salary", "income", "budget", "economy",
    "profit", "loss", "debt", "loan", "trade", "investment", "internet", "website", "software",
    "network", "device", "machine", "tool", "camera", "screen", "television", "radio", "song",
    "band", "concert", "theatre", "theater", "festival", "sport", "football", "match",
    "competition", "race", "score", "hobby", "habit", "skill", "ability", "talent", "quality",
    "quantity", "amount", "size", "shape", "colour", "color", "detail", "feature", "aspect",
    "factor", "element", "method", "approach", "strategy", "technique", "system", "structure",
    "function", "condition", "situation", "circumstance", "context", "background", "basis",
    "conclusion", "summary", "introduction", "argument", "discussion", "debate", "interview",
    "survey", "statistic", "percentage", "majority", "minority", "individual", "public",
    "people", "man", "woman", "child", "foot", "tooth", "mouse", "goose", "wife", "knife", "leaf",
    "half", "wolf", "analysis", "criterion", "phenomenon", "shelf", "thief", "car", "friendship",
    "childhood", "happiness", "sadness", "kindness", "loneliness", "weakness", "strength",
    "length", "width", "height", "depth", "weight", "speed", "distance", "direction", "corner",
    "edge", "surface", "middle", "top", "bottom", "front", "inside", "outside", "address",
    "message", "conversation", "communication", "relation", "connection", "contact", "media",
    "advertisement", "advertising", "product", "brand", "quality", "commitment", "responsibility",
    "generation", "society", "individual", "income", "transport", "transportation", "vehicle",
    "engine", "fuel", "gas", "electricity", "resource", "material", "metal", "wood", "glass",
    "plastic", "stone", "rock", "sand", "dust", "smoke", "fire", "heat", "temperature", "degree",
    "ocean", "coast", "desert", "valley", "hill", "field", "farm", "farmer", "crop", "plant",
    "seed", "root", "branch", "grass", "insect", "snake", "lion", "tiger", "elephant", "monkey",
    "pet", "zoo", "uniform", "clothes", "shirt", "dress", "shoe", "hat", "coat", "jacket",
    "pocket", "ring", "watch", "clock", "calendar", "date", "deadline", "period", "century",
    "decade", "weekend", "afternoon", "evening", "midnight", "noon", "today", "memory",
    "brain", "thought", "feeling", "emotion", "attitude", "personality", "character", "behavior",
    "manner", "style", "fashion", "trend", "stress", "pressure", "challenge", "difficulty",
    "obstacle", "risk", "threat", "damage", "harm", "injury", "victim", "hero", "enemy",
    "winner", "loser", "champion", "captain", "leader", "king", "queen", "prince", "princess",
    "god", "soul", "spirit", "ghost", "magic", "luck", "fortune", "wealth", "poverty", "hunger",
    "thirst", "sleep", "rest", "exercise", "diet", "vegetable", "salt", "sugar", "oil", "soup",
    "sandwich", "pizza", "chocolate", "wine", "beer", "juice", "bottle", "cup", "glass", "plate",
    "dish", "spoon", "fork", "pot", "meal", "recipe", "cook", "chef", "waiter", "menu", "bill",
    "tip", "coin", "card", "credit", "cash", "account", "application", "form", "document",
    "file", "folder", "page", "chapter", "title", "author", "writer", "poet", "poem", "novel",
    "magazine", "newspaper", "journal", "reader", "audience", "crowd", "stage", "actor",
    "actress", "role", "scene", "painting", "artist", "design", "designer", "photo",
    "photograph", "video", "channel", "series", "episode", "campaign", "election", "vote",
    "candidate", "minister", "politician", "parliament", "congress", "department", "agency",
    "authority", "institution", "organisation", "charity", "volunteer", "donation", "fund",
    "worry", "surprise", "smile", "laugh", "cry", "noise", "sound", "silence", "taste", "smell",
    "touch", "sight", "view", "scenery", "landscape", "region", "district", "province",
    "capital", "border", "continent", "foreigner", "immigrant", "tourist", "tourism", "visitor",
    "population", "crowd", "queue", "line", "row", "list", "set", "pair", "series", "sort",
    "variety", "range", "mixture", "combination", "balance", "standard", "norm", "limit",
    "boundary", "gap", "hole", "crack", "mark", "sign", "signal", "symbol", "code", "password",
    "user", "member", "fan", "supporter", "opponent", "partner", "relative", "ancestor",
    "teacher", "professor", "lecturer", "tutor", "pupil", "classmate", "graduate", "degree",
    "course", "curriculum", "term", "semester", "career", "profession", "occupation",
    "position", "promotion", "interview", "application", "experiment", "laboratory", "theory",
    "hypothesis", "discovery", "invention", "innovation", "progress", "improvement", "growth",
    "increase", "decrease", "reduction", "rise", "fall", "drop", "peak", "average", "total",
    "sum", "majority", "unit", "piece", "bit", "part", "portion", "share", "stock", "supply",
    "demand", "consumer", "producer", "factory", "office", "headquarters", "branch",
    "equipment", "facility", "service", "access", "entrance", "exit", "gate", "fence", "roof",
    "floor", "ceiling", "stair", "step", "lift", "elevator", "apartment", "flat", "neighbourhood",
    "neighborhood", "suburb", "countryside", "downtown", "square", "avenue", "lane", "path",
    "track", "route", "map", "guide", "instruction", "direction", "permission", "license",
    "rent", "fee", "fine", "penalty", "punishment", "reward", "prize", "award", "medal",
    "certificate", "diploma", "passenger", "driver", "pilot", "crew", "guard", "officer",
    "detective", "witness", "judge", "jury", "trial", "case", "court", "justice", "violence",
    "war", "battle", "weapon", "gun", "bomb", "attack", "defence", "defense", "protection",
    "shelter", "camp", "tent", "adventure", "expedition", "exploration", "journey", "tour",
};

inline constexpr std::string_view kVerbs[] = {
    "say", "make", "know", "think", "take", "see", "come", "want", "look", "use", "find", "give",
    "tell", "call", "try", "ask", "feel", "become", "leave", "put", "mean", "keep", "let",
    "begin", "seem", "help", "talk", "turn", "start", "hear", "play", "run", "move", "like", "love",
    "live", "believe", "hold", "bring", "happen", "write", "provide", "sit", "stand", "lose",
    "pay", "meet", "include", "continue", "set", "learn", "lead", "understand", "watch",
    "follow", "stop", "create", "speak", "read", "allow", "add", "spend", "grow", "open", "walk",
    "win", "offer", "remember", "consider", "appear", "buy", "wait", "serve", "die", "send",
    "expect", "build", "stay", "fall", "cut", "reach", "kill", "remain", "suggest", "raise",
    "pass", "sell", "require", "decide", "pull", "eat", "drink", "sleep", "worry", "surround",
    "distract", "receive", "improve", "correct", "avoid", "agree", "explain", "hope", "develop",
    "carry", "break", "drive", "wear", "choose", "teach", "catch", "fight", "forget", "swim",
    "sing", "fly", "throw", "ride", "hide", "answer", "enjoy", "travel", "visit", "finish",
    "prefer", "cook", "clean", "wash", "arrive", "return", "describe", "discuss", "go", "get",
    "do", "have", "be", "need", "seek", "cause", "destroy", "protect", "prevent", "reduce",
    "increase", "decrease", "produce", "compare", "contain", "depend", "achieve", "affect",
    "apply", "argue", "attend", "attract", "borrow", "lend", "check", "climb", "close",
    "collect", "complain", "complete", "concentrate", "connect", "contribute", "convince",
    "cover", "cross", "dance", "deal", "deliver", "deny", "design", "discover", "dislike",
    "draw", "earn", "encourage", "enter", "establish", "examine", "exist", "experience",
    "express", "fail", "fill", "fix", "focus", "force", "gain", "guess", "hate", "hurt",
    "identify", "ignore", "imagine", "influence", "inform", "invite", "join", "jump", "kick",
    "kiss", "knock", "laugh", "lie", "lift", "listen", "manage", "marry", "matter", "mention",
    "mind", "miss", "notice", "obtain", "occur", "own", "paint", "perform", "persuade", "pick",
    "plan", "plant", "point", "practise", "practice", "prepare", "present", "pretend",
    "promise", "prove", "publish", "push", "realize", "realise", "recognize", "recommend",
    "refuse", "relax", "rely", "remove", "repair", "repeat", "replace", "reply", "represent",
    "rescue", "respect", "respond", "rest", "retire", "save", "search", "share", "shoot",
    "shop", "shout", "shut", "smile", "solve", "sound", "spell", "steal", "study", "succeed",
    "suffer", "supply", "support", "suppose", "survive", "talk", "taste", "thank", "touch",
    "train", "translate", "treat", "trust", "type", "vote", "waste", "wake", "wish", "wonder",
    "work", "ban", "beg", "drop", "grab", "hug", "jog", "nod", "rob", "admit", "commit",
    "permit", "regret", "refer", "occur", "control", "upset", "bet", "quit", "feed", "bite",
    "blow", "dig", "forgive", "freeze", "hang", "shake", "shine", "sink", "spin", "split",
    "spread", "stick", "sting", "strike", "swear", "sweep", "swing", "tear", "bend", "bind",
    "bleed", "breed", "burn", "deal", "dream", "hit", "hurt", "kneel", "lay", "lean", "leap",
    "light", "prove", "seat", "sew", "slide", "smell", "speed", "spill", "spoil", "weep",
    "combine", "consume", "criticize", "criticise", "define", "demand", "determine", "differ",
    "doubt", "educate", "eliminate", "emphasize", "employ", "enable", "ensure", "estimate",
    "evaluate", "exercise", "explore", "face", "fear", "feature", "handle", "harm",
    "implement", "imply", "indicate", "involve", "limit", "maintain", "measure", "observe",
    "operate", "organize", "organise", "participate", "predict", "preserve", "proceed",
    "promote", "purchase", "recover", "reflect", "regard", "reject", "release", "remind",
    "report", "reveal", "satisfy", "select", "separate", "settle", "solve", "store", "stress",
    "struggle", "submit", "suit", "tend", "test", "threaten", "transform", "vary", "warn",
    "welcome", "worsen", "benefit", "afford", "accept", "achieve", "adapt", "admire", "advise",
    "announce", "annoy", "apologize", "apologise", "appreciate", "approve", "arrange", "assume",
    "attach", "attempt", "bake", "bathe", "behave", "belong", "blame", "boil", "bother",
    "breathe", "brush", "calculate", "celebrate", "challenge", "chat", "cheat", "cheer",
    "chew", "communicate", "compete", "confirm", "confuse", "consist", "copy",
    "count", "crash", "cry", "damage", "decorate", "delay", "delete", "deserve", "download",
    "dress", "drown", "edit", "embarrass", "escape", "exchange", "excite", "excuse", "expand",
    "export", "fancy", "fetch", "file", "fold", "frighten", "gather", "greet", "guarantee",
    "guide", "hunt", "hurry", "import", "impress", "injure", "insist", "inspire", "install",
    "interrupt", "introduce", "invent", "invest", "iron", "joke", "judge", "kneel", "land",
    "last", "launch", "lock", "mark", "melt", "memorize", "mix", "murder", "obey", "offend",
    "order", "pack", "park", "pause", "phone", "pour", "pray", "print", "produce", "protest",
    "punish", "queue", "race", "rain", "reach", "record", "recycle", "register", "relate",
    "rent", "request", "reserve", "risk", "rush", "scream", "shiver", "sign", "ski", "smoke",
    "snow", "sneeze", "spare", "stare", "step", "suspect", "switch", "tempt", "tidy", "tire",
    "trade", "trap", "upload", "value", "view", "visit", "wander", "warm", "water", "wave",
    "weigh", "whisper", "wrap", "yell", "zoom",
};

inline constexpr std::string_view kAdjectives[] = {
    "good", "bad", "new", "old", "great", "high", "small", "large", "big", "long", "little",
    "young", "important", "different", "early", "late", "public", "same", "able", "real", "hard",
    "easy", "happy", "sad", "nice", "quick", "slow", "careful", "beautiful", "simple", "clear",
    "free", "full", "strong", "possible", "whole", "certain", "sure", "likely", "ready",
    "serious", "difficult", "available", "similar", "short", "low", "poor", "rich", "hot",
    "cold", "warm", "cool", "dark", "bright", "heavy", "true", "wrong", "strange", "interesting",
    "busy", "tired", "angry", "lucky", "safe", "dangerous", "expensive", "cheap", "fast",
    "dirty", "quiet", "loud", "smart", "pretty", "ugly", "huge", "tiny", "main", "major",
    "minor", "recent", "social", "political", "local", "national", "human", "natural",
    "personal", "economic", "general", "final", "daily", "friendly", "lonely", "lovely",
    "crazy", "famous", "popular", "modern", "ancient", "popular", "healthy", "sick", "ill",
    "useful", "useless", "helpful", "harmful", "successful", "powerful", "wonderful",
    "terrible", "horrible", "awful", "excellent", "perfect", "normal", "usual", "common",
    "rare", "special", "particular", "specific", "various", "original", "traditional",
    "cultural", "international", "global", "environmental", "financial", "professional",
    "academic", "effective", "efficient", "positive", "negative", "necessary", "essential",
    "significant", "obvious", "honest", "polite", "rude", "proud", "ashamed", "afraid",
    "worried", "anxious", "nervous", "calm", "relaxed", "excited", "bored", "boring",
    "surprised", "pleased", "glad", "sorry", "fair", "unfair", "fresh", "clean", "empty",
    "wide", "narrow", "thick", "thin", "deep", "shallow", "fat", "slim", "tall", "soft",
    "smooth", "rough", "sharp", "sweet", "sour", "bitter", "salty", "delicious", "tasty",
    "wet", "dry", "sunny", "rainy", "windy", "cloudy", "foggy", "green", "red", "blue",
    "yellow", "black", "white", "brown", "grey", "gray", "pink", "purple", "orange", "golden",
    "silver", "wooden", "private", "official", "legal", "illegal", "correct", "incorrect",
    "accurate", "exact", "complete", "entire", "total", "basic", "central", "current",
    "previous", "next", "last", "further", "extra", "additional", "alternative", "independent",
    "responsible", "aware", "capable", "familiar", "foreign", "native", "urban", "rural",
    "male", "female", "single", "married", "alive", "dead", "elderly", "mental", "physical",
    "medical", "digital", "technical", "scientific", "creative", "active", "passive",
    "attractive", "comfortable", "convenient", "crowded", "cruel", "curious", "dangerous",
    "direct", "eager", "fit", "flat", "fond", "funny", "gentle", "grateful", "guilty",
    "hungry", "thirsty", "innocent", "intelligent", "clever", "stupid", "silly", "wise",
    "keen", "kind", "lazy", "mad", "modest", "narrow", "neat", "noisy", "patient",
    "impatient", "pleasant", "pure", "rapid", "reasonable", "relevant", "reliable", "remote",
    "scared", "selfish", "sensible", "sensitive", "severe", "shy", "silent", "sincere",
    "slight", "solid", "spare", "stable", "steady", "strict", "suitable", "tight", "tough",
    "typical", "unique", "upset", "valuable", "vast", "violent", "weak", "wild", "willing",
    "worth", "brave", "bold", "broad", "fierce", "firm", "grand", "harsh", "mild", "odd",
    "plain", "proper", "raw", "ripe", "rude", "vague", "vital", "simple", "gentle", "able",
    "humble", "noble", "subtle", "idle", "fine", "safe", "brief", "calm", "free", "rare",
    "close", "far", "near", "best", "main", "upper", "inner", "outer", "fewer", "spoken",
};

/// One irregular inflection: surface form, lemma, POS, and verb/noun/adj
/// feature tag understood by lexicon.hpp.
struct Irregular {
  std::string_view form;
  std::string_view lemma;
  char pos;       // 'V', 'N', 'A'
  char feature;   // verbs: 'b' base,'p' present,'3' 3sg,'d' past,'s' past sg,'l' past pl,'n' participle,'g' gerund
                  // nouns: 'p' plural; adjectives: 'c' comparative,'s' superlative
};

inline constexpr Irregular kIrregulars[] = {
    {"am", "be", 'V', 'p'},        {"are", "be", 'V', 'p'},        {"is", "be", 'V', '3'},
    {"was", "be", 'V', 's'},       {"were", "be", 'V', 'l'},       {"been", "be", 'V', 'n'},
    {"being", "be", 'V', 'g'},     {"has", "have", 'V', '3'},      {"had", "have", 'V', 'd'},
    {"does", "do", 'V', '3'},      {"did", "do", 'V', 'd'},        {"done", "do", 'V', 'n'},
    {"goes", "go", 'V', '3'},      {"went", "go", 'V', 'd'},       {"gone", "go", 'V', 'n'},
    {"ate", "eat", 'V', 'd'},      {"eaten", "eat", 'V', 'n'},     {"said", "say", 'V', 'd'},
    {"made", "make", 'V', 'd'},    {"knew", "know", 'V', 'd'},     {"known", "know", 'V', 'n'},
    {"thought", "think", 'V', 'd'}, {"took", "take", 'V', 'd'},    {"taken", "take", 'V', 'n'},
    {"saw", "see", 'V', 'd'},      {"seen", "see", 'V', 'n'},      {"came", "come", 'V', 'd'},
    {"found", "find", 'V', 'd'},   {"gave", "give", 'V', 'd'},     {"given", "give", 'V', 'n'},
    {"told", "tell", 'V', 'd'},    {"became", "become", 'V', 'd'}, {"left", "leave", 'V', 'd'},
    {"meant", "mean", 'V', 'd'},   {"kept", "keep", 'V', 'd'},     {"began", "begin", 'V', 'd'},
    {"begun", "begin", 'V', 'n'},  {"heard", "hear", 'V', 'd'},    {"ran", "run", 'V', 'd'},
    {"held", "hold", 'V', 'd'},    {"brought", "bring", 'V', 'd'}, {"wrote", "write", 'V', 'd'},
    {"written", "write", 'V', 'n'}, {"sat", "sit", 'V', 'd'},      {"stood", "stand", 'V', 'd'},
    {"lost", "lose", 'V', 'd'},    {"paid", "pay", 'V', 'd'},      {"met", "meet", 'V', 'd'},
    {"led", "lead", 'V', 'd'},     {"understood", "understand", 'V', 'd'},
    {"spoke", "speak", 'V', 'd'},  {"spoken", "speak", 'V', 'n'},  {"spent", "spend", 'V', 'd'},
    {"grew", "grow", 'V', 'd'},    {"grown", "grow", 'V', 'n'},    {"won", "win", 'V', 'd'},
    {"bought", "buy", 'V', 'd'},   {"sent", "send", 'V', 'd'},     {"built", "build", 'V', 'd'},
    {"fell", "fall", 'V', 'd'},    {"fallen", "fall", 'V', 'n'},   {"drank", "drink", 'V', 'd'},
    {"drunk", "drink", 'V', 'n'},  {"slept", "sleep", 'V', 'd'},   {"broke", "break", 'V', 'd'},
    {"broken", "break", 'V', 'n'}, {"drove", "drive", 'V', 'd'},   {"driven", "drive", 'V', 'n'},
    {"wore", "wear", 'V', 'd'},    {"worn", "wear", 'V', 'n'},     {"chose", "choose", 'V', 'd'},
    {"chosen", "choose", 'V', 'n'}, {"taught", "teach", 'V', 'd'}, {"caught", "catch", 'V', 'd'},
    {"fought", "fight", 'V', 'd'}, {"forgot", "forget", 'V', 'd'}, {"forgotten", "forget", 'V', 'n'},
    {"swam", "swim", 'V', 'd'},    {"swum", "swim", 'V', 'n'},     {"sang", "sing", 'V', 'd'},
    {"sung", "sing", 'V', 'n'},    {"flew", "fly", 'V', 'd'},      {"flown", "fly", 'V', 'n'},
    {"threw", "throw", 'V', 'd'},  {"thrown", "throw", 'V', 'n'},  {"rode", "ride", 'V', 'd'},
    {"ridden", "ride", 'V', 'n'},  {"hid", "hide", 'V', 'd'},      {"hidden", "hide", 'V', 'n'},
    {"got", "get", 'V', 'd'},      {"gotten", "get", 'V', 'n'},    {"sold", "sell", 'V', 'd'},
    {"felt", "feel", 'V', 'd'},    {"read", "read", 'V', 'b'},     {"drew", "draw", 'V', 'd'},
    {"drawn", "draw", 'V', 'n'},   {"fed", "feed", 'V', 'd'},      {"bit", "bite", 'V', 'd'},
    {"bitten", "bite", 'V', 'n'},  {"blew", "blow", 'V', 'd'},     {"blown", "blow", 'V', 'n'},
    {"dug", "dig", 'V', 'd'},      {"forgave", "forgive", 'V', 'd'}, {"forgiven", "forgive", 'V', 'n'},
    {"froze", "freeze", 'V', 'd'}, {"frozen", "freeze", 'V', 'n'}, {"hung", "hang", 'V', 'd'},
    {"shook", "shake", 'V', 'd'},  {"shaken", "shake", 'V', 'n'},  {"shone", "shine", 'V', 'd'},
    {"sank", "sink", 'V', 'd'},    {"sunk", "sink", 'V', 'n'},     {"spun", "spin", 'V', 'd'},
    {"stuck", "stick", 'V', 'd'},  {"stung", "sting", 'V', 'd'},   {"struck", "strike", 'V', 'd'},
    {"swore", "swear", 'V', 'd'},  {"sworn", "swear", 'V', 'n'},   {"swept", "sweep", 'V', 'd'},
    {"swung", "swing", 'V', 'd'},  {"tore", "tear", 'V', 'd'},     {"torn", "tear", 'V', 'n'},
    {"bent", "bend", 'V', 'd'},    {"bound", "bind", 'V', 'd'},    {"bled", "bleed", 'V', 'd'},
    {"bred", "breed", 'V', 'd'},   {"burnt", "burn", 'V', 'd'},    {"dealt", "deal", 'V', 'd'},
    {"dreamt", "dream", 'V', 'd'}, {"knelt", "kneel", 'V', 'd'},   {"laid", "lay", 'V', 'd'},
    {"lay", "lie", 'V', 'd'},      {"lain", "lie", 'V', 'n'},      {"leapt", "leap", 'V', 'd'},
    {"lit", "light", 'V', 'd'},    {"sewn", "sew", 'V', 'n'},      {"slid", "slide", 'V', 'd'},
    {"sped", "speed", 'V', 'd'},   {"stole", "steal", 'V', 'd'},   {"stolen", "steal", 'V', 'n'},
    {"woke", "wake", 'V', 'd'},    {"woken", "wake", 'V', 'n'},    {"wept", "weep", 'V', 'd'},
    {"sought", "seek", 'V', 'd'},  {"shot", "shoot", 'V', 'd'},    {"rose", "rise", 'V', 'd'},
    {"risen", "rise", 'V', 'n'},
    {"men", "man", 'N', 'p'},      {"women", "woman", 'N', 'p'},   {"children", "child", 'N', 'p'},
    {"people", "person", 'N', 'p'}, {"feet", "foot", 'N', 'p'},    {"teeth", "tooth", 'N', 'p'},
    {"mice", "mouse", 'N', 'p'},   {"geese", "goose", 'N', 'p'},   {"lives", "life", 'N', 'p'},
    {"wives", "wife", 'N', 'p'},   {"knives", "knife", 'N', 'p'},  {"leaves", "leaf", 'N', 'p'},
    {"halves", "half", 'N', 'p'},  {"wolves", "wolf", 'N', 'p'},   {"analyses", "analysis", 'N', 'p'},
    {"criteria", "criterion", 'N', 'p'}, {"phenomena", "phenomenon", 'N', 'p'},
    {"shelves", "shelf", 'N', 'p'}, {"thieves", "thief", 'N', 'p'}, {"sheep", "sheep", 'N', 'p'},
    {"fish", "fish", 'N', 'p'},
    {"better", "good", 'A', 'c'},  {"best", "good", 'A', 's'},     {"worse", "bad", 'A', 'c'},
    {"worst", "bad", 'A', 's'},    {"farther", "far", 'A', 'c'},   {"farthest", "far", 'A', 's'},
    {"more", "much", 'A', 'c'},    {"most", "much", 'A', 's'},     {"less", "little", 'A', 'c'},
    {"least", "little", 'A', 's'},
};

/// Verbs whose final consonant doubles before -ed/-ing.
inline constexpr std::string_view kDoublingVerbs[] = {
    "stop", "plan", "drop", "shop", "chat", "grab", "rob", "beg", "hug", "jog", "nod", "ban",
    "admit", "commit", "permit", "regret", "refer", "occur", "prefer", "control", "upset",
    "bet", "quit", "run", "swim", "sit", "win", "cut", "put", "set", "hit", "get", "begin",
    "forget", "dig", "spin", "split", "trap", "step", "travel", "cancel",
};

}  // namespace peet::lexicon::data
