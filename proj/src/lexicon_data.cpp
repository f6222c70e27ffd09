#include "lexicon_data.hpp"

#include <sstream>

namespace cci::lex {

namespace {

std::vector<std::string> split_words(const char* blob) {
  std::vector<std::string> words;
  std::istringstream in(blob);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::unordered_set<std::string> to_set(const std::vector<std::string>& words) {
  return {words.begin(), words.end()};
}

// Classic English stopword inventory plus contracted forms, modals, and a
// few function-ish words common in dialogue transcripts.
const char* kStopwordBlob = R"(
i me my myself we our ours ourselves you you're you've you'll you'd your yours
yourself yourselves he him his himself she she's her hers herself it it's its
itself they them their theirs themselves what which who whom this that that'll
these those am is are was were be been being have has had having do does did
doing a an the and but if or because as until while of at by for with about
against between into through during before after above below to from up down
in out on off over under again further then once here there when where why how
all any both each few more most other some such no nor not only own same so
than too very s t can will just don don't should should've now d ll m o re ve
y ain aren aren't couldn couldn't didn didn't doesn doesn't hadn hadn't hasn
hasn't haven haven't isn isn't ma mightn mightn't mustn mustn't needn needn't
shan shan't shouldn shouldn't wasn wasn't weren weren't won won't wouldn
wouldn't
us could would might must shall may cannot can't let's i'm i've i'll i'd
we're we've we'll we'd they're they've they'll they'd he's he'll he'd she'll
she'd it'll it'd there's here's that's what's who's where's when's why's how's
oh gonna wanna gotta something anything nothing everything someone
anyone everyone somebody anybody nobody everybody none ever never also else
)";

// Base-form verbs for suffix analysis and noun/verb arbitration.
const char* kVerbBlob = R"(
accept add admire admit advise afford agree allow announce annoy answer
apologize appear apply argue arrange arrive ask attend avoid bake base be
bear beat become beg begin believe belong bet blame block blow boil book
borrow bother brake break bring browse brush build burn buy calculate call
cancel care carry catch cause celebrate change charge chase chat check cheer
choose chop claim clean clear climb close collect come complain complete
confirm confuse congratulate connect consider contain continue cook copy
correct cost cough count cover crash crave create cross cry cut dance decide
decorate delay deliver depend describe deserve design develop dial die dig
disagree discover discuss dislike disturb dive do doubt drag draw dream dress
drink drive drop dry earn eat email encourage end enjoy enter examine exchange
excite excuse exercise expect explain express fail fall fasten fear feed feel
fetch fight fill find finish fit fix flaunt flee float floss flow fly fold
follow forget forgive freeze fry gain gather get give go grab graduate greet
grow guess handle hang happen hate have head hear heat help hide hike hire
hit hold hope hug hurry hurt ignore imagine improve include inform injure
insist install intend interest introduce invite iron join joke jump keep kick
kill kiss knock know land last laugh lead lean learn leave lend let lie lift
light like listen live load lock look lose love make manage mark marry match
matter mean measure meet melt mend mention mind miss mix motivate move name
need notice obey offer open order pack paint park pass pay perform pick plan
plant play please point polish postpone pour practice practise prefer prepare
present press pretend prevent print process produce promise propose protect
prove pull punish push put quit rain raise reach read realize receive
recommend record recover reduce refer refuse regret relax remain remember
remind remove rent repair repeat replace reply request require reserve rest
return review ride ring rise roast run rush save say scare schedule scold
scream search see seem sell send serve set settle share shake shine shop
shout show shut sign sing sit skate ski skip sleep slip smell smile smoke
snow solve sort sound speak spell spend spill spoil stand start stay steal
stick stop study succeed suffer suggest suit sum supply support suppose
surprise swim take talk taste teach tell test thank think throw tidy tie
touch train translate travel treat trust try turn type understand update use
visit wait wake walk want warn wash waste watch water wave wear weigh welcome
win wipe wish wonder work worry wrap write
)";

const char* kIrregularVerbBlob = R"(
am:be is:be are:be was:be were:be been:be being:be
has:have had:have having:have
does:do did:do done:do doing:do
went:go gone:go
got:get gotten:get
took:take taken:take
came:come
saw:see seen:see
knew:know known:know
thought:think
told:tell
said:say
made:make
found:find
gave:give given:give
caught:catch
bought:buy
brought:bring
taught:teach
felt:feel
kept:keep
left:leave
lost:lose
met:meet
paid:pay
ran:run
sat:sit
sold:sell
sent:send
slept:sleep
spoke:speak spoken:speak
spent:spend
stood:stand
swam:swim swum:swim
threw:throw thrown:throw
understood:understand
wore:wear worn:wear
won:win
wrote:write written:write
drove:drive driven:drive
ate:eat eaten:eat
fell:fall fallen:fall
flew:fly flown:fly
forgot:forget forgotten:forget
broke:break broken:break
chose:choose chosen:choose
woke:wake woken:wake
grew:grow grown:grow
heard:hear
held:hold
led:lead
rode:ride ridden:ride
rose:rise risen:rise
sang:sing sung:sing
shook:shake shaken:shake
drank:drink drunk:drink
drew:draw drawn:draw
began:begin begun:begin
bore:bear borne:bear born:bear
beat:beat beaten:beat
became:become
bet:bet
blew:blow blown:blow
built:build
burnt:burn
cost:cost
cut:cut
dug:dig
fed:feed
fought:fight
froze:freeze frozen:freeze
hid:hide hidden:hide
hit:hit
hung:hang
hurt:hurt
lay:lie lain:lie
lent:lend
lit:light
meant:mean
quit:quit
read:read
rang:ring rung:ring
sought:seek
shone:shine
shot:shoot
shut:shut
stole:steal stolen:steal
stuck:stick
swept:sweep
)";

// Common nouns; used for noun/verb arbitration, -ies lemma checks, and to
// keep title-case common words from being treated as proper nouns.
const char* kNounBlob = R"(
accident advice afternoon age air airport animal answer apartment apple
appointment area arm art article aunt baby bag ball banana band bank bath
bathroom beach bed bedroom beer bike bill bird birthday boat body book boss
bottle box boy bread breakfast bridge brother building bus business cake
call camera car card care case cat chair chance change check cheese chicken
child chocolate church cinema city class classroom clock clothes coat coffee
color company computer concert cook cookie corner country course cousin cream
cup customer dad dance date daughter day deal dentist design desk dinner
dish doctor dog dollar door dress drink drive driver ear egg end evening
event exam example exercise experience eye face fact family fan farm father
fault favor fee festival fever field film fire fish floor flower food foot
football form friend fruit fun game garden gas gift girl glass goal grade
grandmother group guest guide guitar hair half hand hat head health heart
help history hobby holiday home homework hospital hotel hour house husband
ice idea information interest internet interview island item job juice key
kid kind kitchen knife lady lake landlord language lesson letter library
life light line list look lot luck lunch machine mail man manager map
market match matter meal meat medicine meeting member menu message middle
milk mind minute mistake mom moment money month morning mother mountain
movie museum music name nap need neighbor news newspaper night noise noodle
nose note number nurse office oil orange order page pain pair pants paper
parent park part party passenger passport pear pen pencil people person
phone photo piano picture piece pity place plan plane plant plate play
pleasure plenty pocket point police policeman pool practice present price
problem program project pulp purse quarter question rain reason rent report
rest restaurant result rice ride river road room rubbish rule salad sale
salt schedule school sea seat second secretary sentence service shape share
shirt shoe shop show shower side sign signal singer sister situation size
skill sky sleep smell snack snow son song sort sound soup speaker spatula
sport spring star start station stay steak stop store story street student
study stuff subject subway sugar suit summer sun supermarket surprise
sweater sweet table talk taste tax taxi tea teacher team telephone
television temperature term test text texture thanks theater thing ticket
time tip title toast today tomorrow tooth top town toy traffic train trip
trouble truth turn uncle university use vacation vegetable video view
village visit voice wait waiter walk wall wallet watch water way weather
week weekend wife wind window wine winter woman wood word work worker world
worry year
)";

const char* kIrregularNounBlob = R"(
men:man women:woman children:child people:people feet:foot teeth:tooth
mice:mouse wives:wife knives:knife lives:life leaves:leaf shelves:shelf
halves:half loaves:loaf thieves:thief news:news clothes:clothes
glasses:glasses pants:pants scissors:scissors
)";

const char* kAdjectiveBlob = R"(
able afraid alone amazing angry annoyed anxious available awesome awful bad
beautiful best better big bitter black blue bored boring brave bright broken
busy calm careful careless cheap chinese clean clear clever cloudy cold
comfortable confident cool correct crazy curious cute dangerous dark dead
dear deep delicious different difficult dirty double dry early easy
embarrassed empty english excellent excited expensive extra fair famous
fantastic far fast fat favorite final fine first fresh friendly full funny
glad gold good great green grey happy hard healthy heavy high honest hot
huge hungry important impossible interesting international kind large last
late lazy little lonely long loud lovely lucky mad main modern
narrow national natural nervous new next nice noisy normal old open
perfect personal pink pleasant polite poor popular possible pretty
proud public quick quiet rainy ready real red rich right ripe round rude
sad safe salty second secret serious several sharp short sick silly simple
single slow small smart soft sorry sour special spicy strange strict strong
stupid sunny sure sweet tall terrible thick thin third tired traditional
true ugly upset useful usual warm weak wet white whole wide wild windy wise
wonderful wrong yellow young yummy
)";

// Adverbs, prepositions, conjunctions, and interjections not already in the
// stopword list; adjectives are merged in by other_words().
const char* kOtherBlob = R"(
yes yeah yep no nope okay ok alright well oh ah aha hey hi hello wow hmm huh
um uh ha haha ouch oops please maybe perhaps almost already always anyway
around away back definitely especially even exactly forward hardly indeed
instead just later likely nearby nearly nowadays often quite rather
really sometimes somewhere soon still straight though together tonight
yesterday twice actually certainly probably suddenly usually
currently recently finally immediately meanwhile moreover otherwise however
therefore besides plus minus versus via per toward towards upon within
without despite unless since although whether yet ago
)";

const char* kNumberBlob = R"(
zero one two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty
fifty sixty seventy eighty ninety hundred thousand million billion half
dozen couple
)";

// First names appearing in dyadic-dialogue corpora; kept free of words that
// double as common verbs or nouns.
const char* kNameBlob = R"(
david mary joan paul john james michael robert william richard joseph thomas
charles christopher daniel matthew anthony donald steven andrew kenneth
joshua kevin brian george edward ronald timothy jason jeffrey ryan jacob
gary nicholas eric jonathan stephen larry justin scott brandon benjamin
samuel gregory alexander patrick jack dennis jerry tyler aaron jose adam
henry nathan douglas peter zachary kyle walter harold jeremy ethan carl
keith roger arthur terry sean austin noah jesse bryan billy jordan albert
dylan bruce willie gabriel alan juan wayne roy ralph randy eugene vincent
russell elijah louis philip johnny linda barbara elizabeth jennifer maria
susan margaret dorothy lisa nancy karen betty helen sandra donna carol ruth
sharon michelle laura sarah kimberly deborah jessica shirley cynthia angela
melissa brenda amy anna rebecca virginia kathleen pamela martha debra amanda
stephanie carolyn christine marie janet catherine frances ann joyce diane
alice julie heather teresa doris gloria evelyn jean cheryl mildred katherine
emily emma hannah olivia sophia isabella charlotte amelia harper alexis
alyssa kayla megan rachel lauren natalie chloe victoria lucy tom jim bob
mike steve dave dan ben sam alex chris nick tony ken andy josh matt jeff
greg fred ted ned leo max oscar felix simon martin lucas oliver harry
sophie ella grace zoe lily mia ava nora leah sara kate anne jane rose
clara diana elena irene julia karl lena marco nina omar paula rita sonia
tina vera wanda yuri
)";

}  // namespace

const std::vector<std::string>& stopword_list() {
  static const std::vector<std::string> list = split_words(kStopwordBlob);
  return list;
}

const std::unordered_set<std::string>& stopwords() {
  static const std::unordered_set<std::string> set = to_set(stopword_list());
  return set;
}

const std::unordered_set<std::string>& verbs() {
  static const std::unordered_set<std::string> set = to_set(split_words(kVerbBlob));
  return set;
}

namespace {
std::unordered_map<std::string, std::string> parse_pairs(const char* blob) {
  std::unordered_map<std::string, std::string> map;
  for (const std::string& entry : split_words(blob)) {
    const auto colon = entry.find(':');
    map.emplace(entry.substr(0, colon), entry.substr(colon + 1));
  }
  return map;
}
}  // namespace

const std::unordered_map<std::string, std::string>& irregular_verbs() {
  static const std::unordered_map<std::string, std::string> map = parse_pairs(kIrregularVerbBlob);
  return map;
}

const std::unordered_set<std::string>& nouns() {
  static const std::unordered_set<std::string> set = to_set(split_words(kNounBlob));
  return set;
}

const std::unordered_map<std::string, std::string>& irregular_nouns() {
  static const std::unordered_map<std::string, std::string> map = parse_pairs(kIrregularNounBlob);
  return map;
}

const std::unordered_set<std::string>& adjectives() {
  static const std::unordered_set<std::string> set = to_set(split_words(kAdjectiveBlob));
  return set;
}

const std::unordered_set<std::string>& other_words() {
  static const std::unordered_set<std::string> set = [] {
    std::unordered_set<std::string> merged = to_set(split_words(kOtherBlob));
    for (const std::string& w : split_words(kAdjectiveBlob)) merged.insert(w);
    return merged;
  }();
  return set;
}

const std::unordered_set<std::string>& number_words() {
  static const std::unordered_set<std::string> set = to_set(split_words(kNumberBlob));
  return set;
}

const std::unordered_set<std::string>& names() {
  static const std::unordered_set<std::string> set = to_set(split_words(kNameBlob));
  return set;
}

}  // namespace cci::lex
