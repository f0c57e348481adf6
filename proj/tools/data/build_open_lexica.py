#!/usr/bin/env python3
# Copyright 2026 The Stylolab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the open demonstration lexica under core/data/.

The category inventories follow the published LIWC-22 and Grievance
category names. The word lists are small, hand-picked and open; they are
not the proprietary dictionaries.
"""

import json
import os
import sys

# Leaf categories in output order. Parents are filled from their children.
LIWC_LEAVES = {
    "i": "i me my mine myself i'm i've i'll i'd",
    "we": "we us our ours ourselves we're we've we'll let's",
    "you": "you your yours yourself yourselves you're you've you'll u ya",
    "shehe": "he she him her his hers himself herself he's she's",
    "they": "they them their theirs themselves they're they've",
    "ipron": "it its itself this that these those something anything nothing everything someone",
    "article": "a an the",
    "number": "one two three four five six seven eight nine ten hundred thousand million billion first second third",
    "prep": "in on at by for from with about into over under after before between through during without against",
    "auxverb": "am is are was were be been being have has had do does did will would shall should can could may might must",
    "adverb": "very really just so too also quite rather almost always never often here there now then",
    "conj": "and but or because although though while whereas unless if so yet nor",
    "negate": "no not never none nor nobody nothing neither don't can't won't isn't aren't wasn't didn't doesn't",
    "verb": "go went going say said says make made take took get got know knew think thought see saw come came want give",
    "adj": "good bad new old big small great little high low long short large young important different",
    "quantity": "all many much more most few some several every each any lot lots half whole",
    "affiliation": "friend* ally allies together team partner* community join* belong*",
    "achieve": "achiev* win* won success* accomplish* goal* master* earn*",
    "power": "power* control* boss* command* leader* dominat* authorit* strong* weak*",
    "allnone": "all none every always never nothing everything everyone nobody entire*",
    "insight": "think* know* realiz* understand* consider* believ* feel* learn*",
    "cause": "because cause* effect* hence therefore reason* why result*",
    "discrep": "should would could must ought need* want* wish*",
    "tentat": "maybe perhaps possibl* probabl* guess* seem* unsure unclear somewhat",
    "certitude": "certain* definite* sure* clearly obvious* absolutely undoubt* truly",
    "differ": "but else except however unlike instead otherwise differ*",
    "memory": "remember* recall* forget* forgot* memor* remind*",
    "tone_pos": "good great nice love* happy* glad* wonderful best excellent hope*",
    "tone_neg": "bad worse worst hate* awful terrible wrong* sad* angry* fail*",
    "emo_pos": "happy* joy* love* glad* delight* cheer* proud*",
    "emo_anx": "worr* fear* afraid* nervous* anxi* scared* panic*",
    "emo_anger": "angry anger* hate* mad furious* rage* outrage*",
    "emo_sad": "sad* cry* grief* lonely* sorrow* miss* depress*",
    "swear": "damn* hell crap* bloody shit* fuck*",
    "prosocial": "help* care* support* protect* rescue* share* thank*",
    "polite": "please thank* thanks sorry excuse* welcome",
    "conflict": "fight* argu* conflict* attack* battle* war* oppos*",
    "moral": "moral* ethic* right* wrong* evil* honest* justice* fair*",
    "comm": "say* said tell* told talk* speak* spoke* ask* call* announc* report*",
    "socrefs": "people person* man men woman women child* kid* friend* neighbo*",
    "family": "family mother* father* mom* dad* brother* sister* son* daughter* parent*",
    "friend": "friend* buddy* pal mate mates",
    "female": "she her woman women girl* mother* sister* lady ladies",
    "male": "he his him man men boy* father* brother* guy*",
    "politic": "politic* government* parliament* elect* vote* minister* senat* democra*",
    "ethnicity": "ethnic* racial* indigenous* aborigin* asian* african* european*",
    "tech": "computer* internet* phone* software* digital* online* technolog*",
    "leisure": "game* movie* music* party* holiday* sport* relax*",
    "home": "home* house* kitchen* bedroom* garden* apartment*",
    "work": "work* job* office* employ* career* business* company*",
    "money": "money* dollar* price* cost* bank* pay* tax* financ*",
    "relig": "god* church* pray* relig* faith* bible* holy* spirit*",
    "health": "health* doctor* hospital* medic* nurse* clinic*",
    "illness": "ill illness* sick* disease* cancer* virus* infect*",
    "wellness": "wellness* fitness* healthy yoga* exercis* diet*",
    "mental": "mental* depress* anxiety* therap* psych* trauma*",
    "substances": "drug* alcohol* beer* wine* drunk* smok* cocaine*",
    "sexual": "sex* sexual* porn* erotic*",
    "food": "food* eat* ate dinner* lunch* breakfast* meal* cook*",
    "death": "death* dead die* died dying kill* funeral*",
    "need": "need* require* necessar* essential*",
    "want": "want* desire* wish* crave*",
    "acquire": "get gets got buy* bought acquir* obtain*",
    "lack": "lack* without missing shortage* scarce*",
    "fulfill": "enough full* complete* satisf* fulfil*",
    "fatigue": "tired* exhaust* fatigue* sleepy weary*",
    "risk": "risk* danger* threat* unsafe hazard* secur*",
    "curiosity": "curious* wonder* explor* discover* question* search*",
    "allure": "free* new amazing* exclusive* secret* incredible* shocking*",
    "attention": "look* watch* listen* notice* attention* focus*",
    "motion": "go goes went move* walk* run* drive* fly* arriv*",
    "space": "in on up down above below near far around inside outside",
    "visual": "see saw seen look* watch* view* color* bright*",
    "auditory": "hear* heard listen* sound* loud* quiet* voice*",
    "feeling": "feel* felt touch* hard soft warm* cold* pain*",
    "time": "time* today tomorrow yesterday now when then soon year* day* week*",
    "focuspast": "was were had did ago yesterday said went used",
    "focuspresent": "is are am now today currently does has",
    "focusfuture": "will shall going soon tomorrow future* gonna",
    "netspeak": "lol omg btw idk tbh imo lmao",
    "assent": "yes yeah yep ok okay agree* absolutely",
    "nonflu": "um umm uh er hmm",
    "filler": "like youknow imean whatever anyway",
}

# Parent categories and their children (already-defined names).
LIWC_PARENTS = {
    "pronoun": ["ppron", "ipron"],
    "ppron": ["i", "we", "you", "shehe", "they"],
    "det": ["article", "number"],
    "function": ["pronoun", "det", "prep", "auxverb", "adverb", "conj", "negate"],
    "Linguistic": ["function", "verb", "adj", "quantity"],
    "Drives": ["affiliation", "achieve", "power"],
    "cogproc": ["insight", "cause", "discrep", "tentat", "certitude", "differ", "memory"],
    "Cognition": ["allnone", "cogproc"],
    "emotion": ["emo_pos", "emo_neg"],
    "emo_neg": ["emo_anx", "emo_anger", "emo_sad"],
    "Affect": ["tone_pos", "tone_neg", "emotion", "swear"],
    "socbehav": ["prosocial", "polite", "conflict", "moral", "comm"],
    "Social": ["socbehav", "socrefs"],
    "Culture": ["politic", "ethnicity", "tech"],
    "Lifestyle": ["leisure", "home", "work", "money", "relig"],
    "Physical": ["health", "illness", "wellness", "mental", "substances", "sexual", "food", "death"],
    "Perception": ["attention", "motion", "space", "visual", "auditory", "feeling"],
    "Conversation": ["netspeak", "assent", "nonflu", "filler"],
}

# Dictionary categories in output order (summary variables are not in the .dic).
LIWC_ORDER = [
    "Linguistic", "function", "pronoun", "ppron", "i", "we", "you", "shehe",
    "they", "ipron", "det", "article", "number", "prep", "auxverb", "adverb",
    "conj", "negate", "verb", "adj", "quantity", "Drives", "affiliation",
    "achieve", "power", "Cognition", "allnone", "cogproc", "insight", "cause",
    "discrep", "tentat", "certitude", "differ", "memory", "Affect", "tone_pos",
    "tone_neg", "emotion", "emo_pos", "emo_neg", "emo_anx", "emo_anger",
    "emo_sad", "swear", "Social", "socbehav", "prosocial", "polite",
    "conflict", "moral", "comm", "socrefs", "family", "friend", "female",
    "male", "Culture", "politic", "ethnicity", "tech", "Lifestyle", "leisure",
    "home", "work", "money", "relig", "Physical", "health", "illness",
    "wellness", "mental", "substances", "sexual", "food", "death", "need",
    "want", "acquire", "lack", "fulfill", "fatigue", "risk", "curiosity",
    "allure", "Perception", "attention", "motion", "space", "visual",
    "auditory", "feeling", "time", "focuspast", "focuspresent", "focusfuture",
    "Conversation", "netspeak", "assent", "nonflu", "filler",
]

LIWC_CONTENT = [
    "family", "friend", "female", "male", "Culture", "politic", "ethnicity",
    "tech", "Lifestyle", "leisure", "home", "work", "money", "relig",
    "Physical", "health", "illness", "wellness", "mental", "sexual", "food",
    "death", "need", "want", "acquire", "lack", "fulfill", "fatigue",
]

GRIEVANCE = {
    "deadline": "deadline* countdown* expir* overdue* ultimatum* tomorrow",
    "desperation": "desperat* hopeless* helpless* despair* pointless",
    "fixation": "obsess* fixat* consum* constantly",
    "frustration": "frustrat* annoy* irritat* unfair*",
    "god": "god* lord* allah* jesus* heaven* divine* almighty",
    "grievance": "grievance* injustice* wrong* betray* humiliat* resent* cheat*",
    "hate": "hate* despis* loath* disgust* vile* scum*",
    "help": "help* assist* support* rescue* aid* save*",
    "honour": "honour* honor* pride* dignit* respect* shame*",
    "impostor": "impostor* fake* fraud* pretend* liar* hoax*",
    "jealousy": "jealous* envy* envious* covet* rival*",
    "loneliness": "lonely* alone isolat* abandon* outcast* nobody",
    "murder": "murder* homicid* slaughter* assassin* massacre* execut*",
    "paranoia": "paranoi* conspir* spying* watching* plot* agenda* cover-up*",
    "planning": "plan* prepar* schedul* organi* strateg* target*",
    "relationship": "relationship* marri* wife* husband* girlfriend* boyfriend* divorc*",
    "soldier": "soldier* army* militar* troop* warrior* combat* veteran*",
    "suicide": "suicid* overdose* self-harm*",
    "surveillance": "surveil* monitor* track* camera* spy* censor* tyrann*",
    "threat": "threat* warn* danger* destroy* menace* intimidat*",
    "violence": "violen* attack* fight* beat* assault* punch* riot*",
    "weaponry": "gun* rifle* weapon* bomb* knife* ammo* pistol*",
}


def leaf_words(name, seen=None):
    if name in LIWC_LEAVES:
        return set(LIWC_LEAVES[name].split())
    words = set()
    for child in LIWC_PARENTS[name]:
        words |= leaf_words(child)
    return words


def write_dic(path, order, lookup):
    entries = {}
    for idx, name in enumerate(order, start=1):
        for w in lookup(name):
            if " " in w:
                continue
            entries.setdefault(w.lower(), set()).add(idx)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("%\n")
        for idx, name in enumerate(order, start=1):
            f.write(f"{idx}\t{name}\n")
        f.write("%\n")
        for w in sorted(entries):
            ids = "\t".join(str(i) for i in sorted(entries[w]))
            f.write(f"{w}\t{ids}\n")


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "..", "core", "data")
    missing = [c for c in LIWC_ORDER
               if c not in LIWC_LEAVES and c not in LIWC_PARENTS]
    assert not missing, missing
    assert len(LIWC_ORDER) == 101, len(LIWC_ORDER)
    assert len(LIWC_CONTENT) == 28
    assert len(GRIEVANCE) == 22
    write_dic(os.path.join(out, "liwc_open.dic"), LIWC_ORDER, leaf_words)
    write_dic(os.path.join(out, "grievance_open.dic"), list(GRIEVANCE),
              lambda n: GRIEVANCE[n].split())
    with open(os.path.join(out, "liwc_blocklist.json"), "w") as f:
        json.dump({"blocklist": LIWC_CONTENT}, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main()
