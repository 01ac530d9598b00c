"""Deterministic English-like lexicon generator for benchmarks and tests.

The environment ships no large wordlist, so experiment-scale lexicons are
synthesized from real English morphemes: common stems combined sparsely
with genuine prefixes, suffixes, and compounding. Sampling is kept sparse
so the morphology does not become more regular than natural text.
"""

from __future__ import annotations

import random

STEMS = """
act add age aim air arm art ash ask back bake ball band bank bar base bat
bath bead beam bean bear beat bed bell belt bench bend best bid bike bill
bind bird bite blade blame blank blast blaze bleed blend bless blind block
blood bloom blow board boast boat body boil bolt bond bone book boost boot
border bore boss bottle bound bow bowl box brain brake branch brand brave
bread break breed brew brick bridge brief bright bring broad brook broom
brush build bulb bulk bull bump bunch bundle burn burst bush butter button
cab cage cake call calm camp can cap car card care cart carve case cast cat
catch cause cave cell cent chain chair chalk chance change chant charge
charm chart chase cheap check cheer chest chew chief child chill chip choice
choose chop churn circle claim clamp clap clash clasp class claw clay clean
clear clerk click cliff climb cling clip cloak clock close cloth cloud clown
club clue clump coach coal coast coat code coil coin cold collar comb come
cook cool cope copper copy cord core cork corn cost cotton couch count court
cover crab crack craft crane crash crate crawl cream creek creep crest crew
crib crisp crop cross crowd crown crush crust cry cube cup curb curl current
curve cut dance dare dark dart dash date dawn day deal dear debt deck deed
deep deer dent depth desk dial dice dig dim dine dip dirt dish dive dock dog
doll dome door dose dot doubt dough dove down drag drain draw dream dress
drift drill drink drip drive drop drum dry duck dull dump dusk dust duty ear
earn earth ease east eat edge elbow elder end enter equal err eve even event
fable face fact fade fail faint fair faith fall fame fan far farm fast fault
fear feast feather feed feel fence fern fetch fever field fight file fill
film find fine finger fire firm fish fist fit fix flag flake flame flap
flash flat flee fleet flesh fling flint flip float flock flood floor flour
flow flush foam fog fold folk fond food fool foot force ford forge fork form
fort found fox frame free fresh frog front frost frown fruit fry fuel full
fun fund fur gain game gap garden gate gather gaze gear gem gift give glad
glance glass gleam glide glow glue goal goat gold golf good grace grade
grain grand grant grape grasp grass grave gray graze great green greet grid
grief grill grim grind grip groan groom groove ground group grove grow growl
guard guess guest guide gulf gust habit hail hair half hall halt hand hang
harbor hard harm harp haste hatch haul hawk hay head heal heap hear heart
heat hedge heel help herd hide high hill hint hip hit hive hold hole hollow
home hood hook hope horn horse host hound hour house hug hull hum hunt hurl
hurt hush hut ice inch iron isle jab jade jail jam jar jaw jet jewel job
join joint joke jolt joy judge jug juice jump just keel keen keep kettle key
kick kid kind king kiss kite knee kneel knife knit knob knock knot know lace
lack ladder lake lamb lamp land lane lap large lash last latch late laugh
launch law lawn lay lead leaf leak lean leap learn lease leash least leave
ledge lend length lens less let level lever lid life lift light like limb
lime limit limp line link lion lip list live load loaf loan lock lodge loft
log lone long look loop loose lord lose loss lot loud lounge love low loyal
luck lump lunch lung lure lush mail main make man map march mark market
marsh mask mass mast match mate math meal mean meat meet melt mend mesh mess
mild mile milk mill mind mine mint miss mist mix moan mock mode mold moment
month mood moon mop moral more morning moss most moth mount mourn mouse
mouth move mud mug mule music must nail name nap narrow navy near neat neck
need nest net new night nod noise noon north nose note noun nurse nut oak
oar oat ocean odd offer oil old open orbit order other ounce oven owl own
pace pack pad page pail pain paint pair pale palm pan pane panel paper park
part pass past paste pat patch path pause pave paw pay peace peach peak pear
peck peel peer pen perch pest pet phase phone pick piece pier pile pill pin
pinch pine pink pipe pit pitch place plain plan plane plant plate play plead
pledge plot plow pluck plug plum plump point pole pond pool pop porch port
pose post pot pour power press price pride prime print prize probe prong
proof prop proud prove prune pull pulse pump punch pure purse push quack
quaint quart queen quest quick quiet quilt quit race rack raft rage rail
rain raise rake ramp range rank rant rare rash rate rave ray reach read real
ream rear rest rib rice rich ride ridge rift rig right rim ring rinse ripe
rise risk road roam roar roast rob rock rod roll roof room root rope rose
rot rough round route row rub rude rug rule run rush rust sack saddle safe
sail salt same sand save saw say scale scan scar scene scent school scoop
scope score scout scrap scrub sea seal seam search season seat see seed seek
seem self sell send sense serve set settle shade shaft shake shale shall
shape share sharp shave shed sheep sheet shelf shell shift shine ship shirt
shock shoe shoot shop shore short shot shout shove show shred shrub shrug
shut side sift sigh sign silk sill silver simple sing sink sip sit size
skate sketch skill skin skip sky slab slack slam slant slap slate sled sleek
sleep sleet slice slide slim sling slip slope slot slow small smart smash
smell smile smoke smooth snap snare snow soak soap sob sock soft soil sole
solve song soon sort soul sound soup sour south sow space spade span spare
spark speak spear speed spell spend spice spill spin spine spit splash split
spoil spoke sponge spool spoon sport spot spout spray spread spring sprout
spur spy squad square squeeze stab stack staff stage stain stair stake stale
stalk stall stamp stand star start state stay steak steal steam steel steep
steer stem step stern stew stick stiff still sting stir stock stone stool
stoop stop store storm story stout stove strain strand strap straw stray
stream street stress stretch stride strike string strip stroke stroll
strong stub stuff stump stun sturdy style such suit sum sun surf surge swamp
swan swap swarm sway sweep sweet swell swift swim swing switch sword table
tag tail take tale talk tall tame tan tank tap tape task taste teach team
tear tell tempt tend tent term test thank thaw theme thick thin thing think
thorn thread thrill throat throb throne throw thumb thump tick tide tie
tight tile till tilt time tin tint tip toast toe toil toll tone tool tooth
top torch toss touch tough tour tow town toy trace track trade trail train
tramp trap trash tray tread treat tree trend trial tribe trick trim trip
troop trot trout truck trunk trust truth try tube tuck tune turf turn twig
twin twist type under urge use vain value van vase vast veil vein vent verb
verse vest view vine visit voice void vote vow wade wage wagon waist wait
wake walk wall wand want ward ware warm warn wash waste watch water wave wax
way weak wealth wear weave web wedge weed week weep weigh weld well west wet
whale wheat wheel whiff while whip whirl white whole wide wife wild will win
wind wine wing wink wipe wire wise wish wit witch wolf wood wool word work
world worm worn worth wound wrap wreck wrist write wrong yard yarn year
yell yield young zeal zest zone
""".split()

PREFIXES = [
    "un", "re", "de", "pre", "dis", "mis", "over", "under", "out", "sub",
    "inter", "non", "anti", "semi", "fore", "counter", "up", "off",
]

SUFFIXES = [
    "s", "ed", "ing", "er", "ers", "est", "ly", "ness", "ful", "less",
    "able", "ment", "tion", "al", "ish", "ous", "ive", "ity", "en", "y",
    "ward", "work", "like", "ship", "age", "dom", "hood",
]


def generate_lexicon(count: int, seed: int = 0) -> list[str]:
    """`count` distinct English-like words, deterministic under the seed."""
    rng = random.Random(seed)
    stems = STEMS
    words: set[str] = set(stems[: min(len(stems), count)])
    while len(words) < count:
        r = rng.random()
        stem = rng.choice(stems)
        if r < 0.30:
            w = stem + rng.choice(SUFFIXES)
        elif r < 0.45:
            w = rng.choice(PREFIXES) + stem
        elif r < 0.70:
            w = rng.choice(PREFIXES) + stem + rng.choice(SUFFIXES)
        elif r < 0.92:
            w = stem + rng.choice(stems)
        else:
            w = stem + rng.choice(stems) + rng.choice(SUFFIXES)
        words.add(w)
    return sorted(words)[:count]


def generate_scored_lexicon(count: int, seed: int = 0) -> tuple[list[str], list[int]]:
    """Words plus Zipf-flavored static scores."""
    words = generate_lexicon(count, seed)
    rng = random.Random(seed + 1)
    scores = [int(1000 / (1 + rng.randrange(1, 200))) for _ in words]
    return words, scores
