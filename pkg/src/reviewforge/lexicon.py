"""Shipped tagging lexicon: closed-class function words plus the common
vocabulary of product reviews. Words outside this list fall through to the
suffix rules in textcore."""

TAGSET = frozenset({
    "NN", "NNS", "NNP", "JJ", "JJR", "JJS",
    "RB", "RBR", "RBS", "VB", "PRP", "DT", "CC", "IN", "CD", "OTHER",
})

# Penn-style tags folded into the closed tagset (pre-tagged input support).
PTB_FOLD = {
    "VBD": "VB", "VBG": "VB", "VBN": "VB", "VBP": "VB", "VBZ": "VB", "MD": "VB",
    "NNPS": "NNS", "PRP$": "PRP", "WDT": "DT", "PDT": "DT",
    "WRB": "RB", "TO": "IN", "UH": "OTHER", "SYM": "OTHER", "FW": "NN",
    "EX": "PRP", "POS": "OTHER", "RP": "IN", "WP": "PRP", "WP$": "PRP",
}

_DT = [
    "the", "a", "an", "this", "that", "these", "those", "some", "any",
    "each", "every", "all", "both", "another", "either", "neither", "such",
]

_PRP = [
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
    "them", "myself", "itself", "themselves", "my", "your", "his", "its",
    "our", "their", "mine", "yours", "one", "something", "nothing", "everything",
]

_CC = ["and", "but", "or", "nor"]

_IN = [
    "in", "on", "at", "by", "for", "with", "about", "against", "between",
    "into", "through", "during", "before", "after", "above", "below", "to",
    "from", "up", "down", "of", "off", "over", "under", "since", "without",
    "within", "along", "across", "behind", "beyond", "near", "if", "because",
    "while", "than", "as", "until", "unless", "although", "though", "whether",
]

_VB = [
    "is", "are", "was", "were", "be", "been", "being", "am",
    "have", "has", "had", "having", "do", "does", "did", "doing",
    "will", "would", "can", "could", "should", "shall", "may", "might", "must",
    "get", "gets", "got", "getting", "make", "makes", "made",
    "buy", "buys", "buying", "bought", "use", "uses", "used", "using",
    "work", "works", "worked", "working",
    "look", "looks", "looked", "looking", "seem", "seems", "seemed",
    "feel", "feels", "felt", "come", "comes", "came", "coming",
    "go", "goes", "going", "went", "take", "takes", "took",
    "love", "loves", "loved", "hate", "hates", "hated",
    "like", "likes", "liked", "recommend", "recommends", "recommended",
    "arrive", "arrives", "arrived", "ship", "ships", "shipped",
    "order", "orders", "ordered", "pay", "pays", "paid",
    "return", "returns", "returned", "break", "breaks", "broke",
    "die", "dies", "died", "stop", "stops", "stopped",
    "'s", "'re", "'m", "'ve", "'ll", "'d",
]

_RB = [
    "very", "really", "quite", "too", "extremely", "highly", "incredibly",
    "absolutely", "totally", "completely", "surprisingly", "also", "always",
    "never", "not", "n't", "hardly", "barely", "just", "only", "still",
    "already", "almost", "definitely", "certainly", "probably", "perhaps",
    "maybe", "often", "sometimes", "usually", "rarely", "again", "even",
    "well", "fairly", "pretty", "so", "much", "far", "rather", "somewhat",
    "truly", "honestly", "simply", "easily",
]

_RBR = ["more", "less"]
_RBS = ["most", "least"]

_JJ = [
    "great", "good", "bad", "nice", "poor", "excellent", "amazing", "awesome",
    "wonderful", "fantastic", "terrible", "horrible", "awful", "cheap",
    "expensive", "slow", "quick", "fast", "easy", "hard", "difficult",
    "simple", "beautiful", "ugly", "bright", "dark", "clear", "blurry",
    "sharp", "dull", "loud", "quiet", "thin", "thick", "heavy", "light",
    "big", "small", "large", "tiny", "huge", "long", "short", "new", "old",
    "strong", "weak", "solid", "flimsy", "sturdy", "stiff", "soft", "smooth",
    "rough", "durable", "fragile", "reliable", "unreliable", "useless",
    "useful", "helpful", "perfect", "decent", "fine", "okay", "happy",
    "unhappy", "satisfied", "disappointed", "disappointing", "impressive",
    "comfortable", "uncomfortable", "convenient", "rich", "crisp", "clean",
    "dirty", "faulty", "defective", "broken", "standard", "tricky", "cool",
    "warm", "hot", "cold", "wrong", "right", "worth", "worthless",
    "responsive", "sleek", "stylish", "elegant", "sluggish", "noisy",
    "gorgeous", "superb", "outstanding", "mediocre", "acceptable",
    "unacceptable", "bulky", "compact", "portable", "lightweight", "grainy",
    "vivid", "accurate", "glossy", "pricey", "affordable", "overpriced",
    "bittersweet", "unbelievable",
]

_JJR = [
    "better", "worse", "richer", "cheaper", "nicer", "bigger", "smaller",
    "larger", "faster", "slower", "brighter", "clearer", "sharper", "louder",
    "quieter", "lighter", "heavier", "stronger", "weaker", "longer",
    "shorter", "newer", "older", "easier", "harder",
]

_JJS = [
    "best", "worst", "coolest", "cheapest", "nicest", "biggest", "smallest",
    "largest", "fastest", "slowest", "brightest", "clearest", "sharpest",
    "easiest", "hardest", "finest", "greatest",
]

# Common review nouns, including -er/-s forms the suffix rules would misread.
_NN = [
    "camera", "phone", "laptop", "computer", "tablet", "screen", "keyboard",
    "battery", "speaker", "charger", "adapter", "printer", "router",
    "scanner", "shutter", "cover", "button", "price", "quality", "sound",
    "video", "photo", "picture", "lens", "case", "manual", "shipping",
    "delivery", "product", "device", "item", "box", "color", "design",
    "display", "size", "weight", "memory", "storage", "software", "hardware",
    "os", "megapixel", "zoom", "flash", "focus", "mode", "menu", "interface",
    "speed", "cable", "port", "jack", "headphone", "microphone", "volume",
    "brightness", "contrast", "grip", "build", "body", "frame", "strap",
    "bag", "kit", "accessory", "firmware", "update", "setup", "packaging",
    "deal", "purchase", "refund", "replacement", "unit", "model", "version",
    "brand", "service", "support", "warranty", "seller", "customer",
    "review", "feature", "issue", "problem", "value", "performance",
    "resolution", "processor", "week", "month", "year", "day", "time",
    "money", "store", "ipod", "app",
]


def _build():
    table = {}
    for words, tag in (
        (_DT, "DT"), (_PRP, "PRP"), (_CC, "CC"), (_IN, "IN"), (_VB, "VB"),
        (_RB, "RB"), (_RBR, "RBR"), (_RBS, "RBS"),
        (_JJ, "JJ"), (_JJR, "JJR"), (_JJS, "JJS"), (_NN, "NN"),
    ):
        for w in words:
            table[w] = tag
    return table


LEXICON = _build()
