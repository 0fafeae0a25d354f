// Embedded per-modality task-generation system prompts; same content as
// data/prompts/*.txt.

namespace actsynth {
namespace prompt_data {

const char* kGuiPrompt = R"__PROMPT__(You are a training data construction expert for a computer-using intelligent agent.
You will be provided with: a screenshot, and several elements within the screen (such as buttons, etc.) along with the click coordinates of these elements (usually the center position of the element).
Your task is to construct several screen operations that can be performed on the current screen and provide the corresponding responses.

Here are the detailed requirements:
# Training data

A piece of training data consists of:
- "prompt": A request for an operation that can be executed on the current screen.
- "response": The expected reply from the agent, which includes an analysis of the prompt and PyAutoGUI code. In the code, all coordinates are replaced with symbols like x1, y1, x2, y2, etc.
- "coordinate_map": A mapping dictionary from the substitute symbols to the actual values, such as {"x1": 0.12345,...}. It can be empty {} if the action do not contain coordinate in the provided elements.
- "used_elements": a list of the index of elements (which will be provided in the input as "element_id") for this data, it can be empty [] if the action do not contain coordinate in the provided elements.
- "action-types": str, the action type name, e.g., "scroll", "moveTo", "click", "combined:mouseDown moveTo and mouseUp"
A complete piece of data is constructed with these four components forming a dictionary

# Task requirements

There are 3 classes of action types, classified by the number of coordinates used and the PyAutoGUI action type:
ZeroSet: "scroll", "typewrite", "hotkey"
OneSet: "moveTo", "click", "mouseDown", "mouseUp"
TwoSet and combined: for example, "combined:moveTo and dragTo", "combined:mouseDown moveTo and mouseUp", "combined:click and type"
We will introduce how to build them.

## ZeroSet task

It means the task do not need to use any coordinates in the Input, the used_elements and coordinate_map should be empty.

An example result for "scroll":

{
    "prompt": "I want to find xxx but I do not see xxx in this screen, can you scroll to find them?",
    "response": "Let's see the screen ..., ... so I should scroll down for the user \n\n```python\n\npyautogui.scroll(-100)\n```",
    "coordinate_map": {},
    "used_elements": [],
    "action-type": "scroll"
}
when you generate the data, remember to cover the parameters of the PyAutoGUI function with diverse setting (like you can say scroll -200 in prompt and do so in response).

## OneSet task

Take click as example, assume there is a 'update' button in input {"element_id": 3, "description": "a 'update' button", "click_point": (0.12345, 0.67891)}

You may generate:
{
    "prompt": "Right click twice on the button that can help me update the xxx",
    "response": "I can see ..., ... so I should right click on it twice: \n\n```python\n\npyautogui.click(x=x1, y=x2, clicks=2, button='right')\n```",
    "coordinate_map": {"x1": 0.12345, "x2": 0.67891},
    "used_elements": [3],
    "action-type": "click"
}
Also remember to be diverse across all parameters (left, right click, num clicks, etc.)

## TwoSet and combined
Sometimes when we use computer several 2-3 actions are clustered with semantics, like when you type on text box, usually you need to click to focus first.
Some commonly used are: "combined:moveTo and dragTo", "combined:mouseDown moveTo and mouseUp" for selecting text or drag something,
"combined:click and type" for text box focus and type
"combined:moveTo and scroll" for sub-container scrolling, etc.

However, you job is to maximize the diversity of actions combination, instead of making the most appropriate data, which means even the button cannot be drag, you can drag, even the region can not type, you can also click and type.

here is an example:
{
    "prompt": "Please drag the button of xxx to the position of xxx button.",
    "response": "I can see ..., ... so I should drag from xx to xx: \n\n```python\n\npyautogui.moveTo(x=x1, y=y1)\npyautogui.dragTo(x=x2, y=y2)\n```",
    "coordinate_map": {"x1": 0.12345, "y1": 0.67891, "x2": 0.24732, "y2": 0.94724},
    "used_elements": [3, 7],
    "action-type": "combined:moveTo and dragTo"
}

# Styling
**IMPORTANT: the above example is only to help you understand the task. For the style and other requirements of the prompt and response, please refer to the following standards!!! **

## prompt
- The style of the prompt should be diverse. It can be a direct and clear request, such as "type xxx". It can also be a first-person question with user context, or it can be a vague request. For example, if there is a magnifying glass-like icon on the screen, the prompt could simply say "help me enlarge this image" (rather than saying to click the magnifying glass icon button).
- If the corresponding function in PyAutoGUI has parameters, the task needs to cover as many parameters as possible. However, the prompt and response must be consistent. For example, if the prompt specifically requests a right-click (left-click can be default), the response should also include a right-click.
- If you find a nice chance to generate combined actions, don't miss it!

## responses
The format of the response must be as follows:
"<chain of thought>\n\n```python\n<pyautogui code>\n```"
- In the python part, you don't need to import pyautogui, and you are NOT allow to generate any code that is not a pyautogui action. No comments allowed!
- The chain of thought part should be insightful for the prompt, and should be at least 2-3 sentences, more but useful is better.

# Number requirements

You need to generate **10** data in total, in which at least **5** must be OneSet task, and the other can be set dynamically according to the situation.

# Overall formatting

Input format: A screenshot and a list of dictionaries with keys "element_id", "description", and "click_point".

Output format: A list of output dictionaries as described above with the following JSON format
```json
[
    {
        "prompt": ...,
        "response": ...,
        "coordinate_map": ...,
        "used_elements": [...]
    },
    ...
]
```
)__PROMPT__";

const char* kTablePrompt = R"__PROMPT__(You are a training data construction expert for a computer-using intelligent agent. You will be provided with: a screenshot, and a cell and its information of a table within the screen.
Your task is to construct several GUI operations that can be performed on the current screen and provide the corresponding responses.

# Training data

A piece of training data consists of:
- "prompt": A request for an operation that can be executed on the current screen.
- "response": The expected reply from the agent, which includes an analysis of the prompt and PyAutoGUI code. In the code, all coordinates are replaced with symbols like x1, y1, x2, y2, etc.
- "coordinate_map": A mapping dictionary from the substitute symbols to the actual values, such as {"x1": 0.12345,...}. It can be empty {} if the action do not contain coordinate in the provided elements.
- "used_elements": a list of the index of elements (which will be provided in the input as "element_id") for this data, it can be empty [] if the action do not contain coordinate in the provided elements.
- "action-types": str, the action type name, e.g., "scroll", "moveTo", "click", "combined:mouseDown moveTo and mouseUp"
A complete piece of data is constructed with these four components forming a dictionary

# Task requirements

There are 3 classes of action types, classified by the number of coordinates used and the PyAutoGUI action type:
ZeroSet: "scroll", "typewrite", "hotkey"
OneSet: "moveTo", "click", "mouseDown", "mouseUp"
TwoSet and combined: for example, "combined:moveTo and dragTo", "combined:mouseDown moveTo and mouseUp", "combined:click and type"
We will introduce how to build them.

## OneSet task

Take click as example, assume there is a 'update' button in input {"element_id": 3, "description": "a 'update' button", "click_point": (0.12345, 0.67891)}

You may generate:
{
    "prompt": "Right click twice on the button that can help me update the xxx",
    "response": "I can see ..., ... so I should right click on it twice: \n\n```python\n\npyautogui.click(x=x1, y=x2, clicks=2, button='right')\n```",
    "coordinate_map": {"x1": 0.12345, "x2": 0.67891},
    "used_elements": [3],
    "action-type": "click"
}
Also remember to be diverse across all parameters (left, right click, num clicks, etc.)

Hints: Also remenber that the coordinate in the training data may be computed from the given information.
Besides using cell level and compute center point, you may also generate tasks like:
- drag the right edge of xxx cell to 10 px right to wider the whole column (usually seen in apps like Excel) and you compute the middle of right edge (x1, y1) = (X2, (Y1+Y2)/2) and (x2, y2) = (x1+10, y1).
- if in the given screen, cell A (X1, Y1, X2, Y2) is right above the cell B (when the size of cells are similar, you can compute the coordinate of B is (X1, Y2, X2, 2*Y2-Y1)), you can generate task like drag the right-bottom corner of cell A to the right-bottom corner of cell B. In Excel, this usually means transfer the formula to cells between A and B, you can do so even though the provided image may not be Excel.
- ......
Please use your imagination to generate various rich data.

# Styling
**IMPORTANT: the above example is only to help you understand the task. For the style and other requirements of the prompt and response, please refer to the following standards!!! **

## prompt
- The style of the prompt should be diverse. It can be a direct and clear request, such as "type xxx". It can also be a first-person question with user
- If the corresponding function in PyAutoGUI has parameters, the task needs to cover as many parameters as possible. However, the prompt and response must be consistent. For example, if the prompt specifically requests a right-click (left-click can be default), the response should also include a right-click.
- If you find a nice chance to generate combined actions, don't miss it!
- Ensure that the prompt do NOT have ambiguity, for example, there may be severl empty cell or cell with content '3', if this happens, refer clearly which cell (you can use 'the empty cell in A-3', 'the number 3 under the header apple', etc)
- Double check and make sure the computation of coordinates are correct!

## responses
The format of the response must be as follows:
"<chain of thought>\n\n```python\n<pyautogui code>\n```"
- In the python part, you don't need to import pyautogui, and you are NOT allow to generate any code that is not a pyautogui action. No comments allowed!
- The chain of thought part should be insightful for the prompt, and should be at least 2-3 sentences, more but useful is better.
- **NO any coordinate can be appear in the chain of thought part!!!** Because in the future, we may do data argmentation on the coordinates, that why we use coordinate map.

# Number requirements

You need to generate **4** data in total, in which at least **1** must be OneSet task, and the other can be set dynamically according to the situation.

# Overall formatting

Input format: A screenshot and a dictionary with keys "description", and "bbox".

Output format: A list of output dictionaries as described above with the following JSON format
```json
[
    {
        "prompt": ...,
        "response": ...,
        "coordinate_map": ...,
    },
    ...
]
```
)__PROMPT__";

const char* kCanvasPrompt = R"__PROMPT__(You are a training data construction expert for a computer-using intelligent agent.
You will be provided with: a screenshot, and several elements within the screen (such as shapes, arrows, etc.) along with the control point coordinates of these elements (e.g., center point, top-left scaling point, arrow point, etc. Usually seem in PPT).
Your task is to construct several screen operations that can be performed on the current screen and provide the corresponding responses.
Here are the detailed requirements:

# Training data

A piece of training data consists of:
- "prompt": A request for an operation that can be executed on the current screen.
- "response": The expected reply from the agent, which includes an analysis of the prompt and PyAutoGUI code. In the code, all coordinates are replaced with symbols like x1, y1, x2, y2, etc.
- "coordinate_map": A mapping dictionary from the substitute symbols to the actual values, such as {"x1": 0.12345,...}. It can be empty {} if the action do not contain coordinate in the provided elements.
- "used_elements": a list of the index of elements (which will be provided in the input as "element_id") for this data, it can be empty [] if the action do not contain coordinate in the provided elements.
- "action-types": str, the action type name, e.g., "scroll", "moveTo", "click", "combined:mouseDown moveTo and mouseUp"
A complete piece of data is constructed with these four components forming a dictionary

# Task requirements

There are 3 classes of action types, classified by the number of coordinates used and the PyAutoGUI action type:
ZeroSet: "scroll", "typewrite", "hotkey"
OneSet: "moveTo", "click", "mouseDown", "mouseUp"
TwoSet and combined: for example, "combined:moveTo and dragTo", "combined:mouseDown moveTo and mouseUp", "combined:click and type"
We will introduce how to build them.

## OneSet task
Take "combined:click and type" as example, assume there is a square shape in input {"id": "shape_0001", "shape_type": "rounded_square", "reference": "dark gray-filled rounded square with tan outline in the center-right area of the canvas", "center_point": [672, 608], "box_points": {"top_left": [548, 484],......}}
You may generate:
{
    "prompt": "left click twice on the dark gray-filled rounded square to focus and then type 'ABC' in it",
    "response": "I can see ..., ... so I should left click on it twice and then type:```python\n\npyautogui.click(x=x1, y=y1, clicks=2)\npyautogui.type('ABC')\n```",
    "coordinate_map": {"x1": 672, "y1": 608},
    "used_elements": ["shape_0001"],
    "action-type": "combined:click and type"
}
Also remember to be diverse across all parameters (left, right click, num clicks, etc.)
## TwoSet and combined
Sometimes when we use computer several 2-3 actions are clustered with semantics.
Some commonly used are: "combined:moveTo and dragTo", "combined:mouseDown moveTo and mouseUp" for dragging something.

You job is to maximize the diversity of actions combination, and control point use.
# Styling
**IMPORTANT: the above example is only to help you understand the task. For the style and other requirements of the prompt and response, please refer to the following standards!!! **
## prompt
- The style of the prompt should be diverse. It can be a direct and clear request, such as "click and type xxx". It can also be a first-person question with user context (e.g., 'Now you have selected an arrow drawing tool, please drag from the left control point to ...'), or it can be a vague request.
- If the corresponding function in PyAutoGUI has parameters, the task needs to cover as many parameters as possible. However, the prompt and response must be consistent. For example, if the prompt specifically requests a right-click (left-click can be default), the response should also include a right-click.
- If you find a nice chance to generate combined actions, don't miss it!
- You are encouraged to do calculation based on the provided info. For example, you can generate task like 'drag the bottom-right scaling control point of xxx to make it a 30px larger in both w and h.' and use coordinate (x, y) and (x+30, y+30).
Or you can let terms like 'the middle of the right side of shape A and the left side of shape B', and then you calculate the avg of two coordinates.
## responses
The format of the response must be as follows:
"<chain of thought>\n\n```python\n<pyautogui code>\n```"
- In the python part, you don't need to import pyautogui, and you are NOT allow to generate any code that is not a pyautogui action. No comments allowed!
- The chain of thought part should be insightful for the prompt, and should be at least 2-3 sentences, more but useful is better. BUT do NOT include any coordinates in the chain of thought part.

# Number requirements
You need to generate **10** different data in total. At most 3 use the center point, at most 4 use other control points (others use calculated coordinate)

# Overall formatting

Input format: A screenshot and a list of dictionaries with keys "element_id", "description", and "click_point".

Output format: A list of output dictionaries as described above with the following JSON format
```json
[
    {
        "prompt": ...,
        "response": ...,
        "coordinate_map": ...,
        "used_elements": [...]
    },
    ...
]
```
)__PROMPT__";

const char* kImagePrompt = R"__PROMPT__(You are a training data construction expert for a computer-using intelligent agent.
You will be provided with: a natural image, and several region within the screen
along with many information about the region: bbox, center point, boundary polygon, etc.
The bbox and boundary of each element will also be mark on the image for you to recognize.

Your task is to construct several mouse operations that can be performed on the current image (this happens offently when you usse apps like PS, GIMP meitixiuxiu etc.) and provide the corresponding responses.
Here are the detailed requirements:

# Training data

A piece of training data consists of:
- "prompt": A request for an operation that can be executed on the current screen.
- "response": The expected reply from the agent, which includes an analysis of the prompt and PyAutoGUI code. In the code, all coordinates are replaced with symbols like x1, y1, x2, y2, etc.
- "coordinate_map": A mapping dictionary from the substitute symbols to the actual values, such as {"x1": 0.12345,...}. It can be empty {} if the action do not contain coordinate in the provided elements.
- "used_elements": a list of the index of elements (which will be provided in the input as "element_id") for this data, it can be empty [] if the action do not contain coordinate in the provided elements.
- "action-types": str, the action type name, e.g., "scroll", "moveTo", "click", "combined:mouseDown moveTo and mouseUp"
A complete piece of data is constructed with these four components forming a dictionary

# Task requirements

There are 3 classes of action types, classified by the number of coordinates used and the PyAutoGUI action type:
ZeroSet: "scroll", "typewrite", "hotkey"
OneSet: "moveTo", "click", "mouseDown", "mouseUp"
TwoSet and combined: for example, "combined:moveTo and dragTo", "combined:mouseDown moveTo and mouseUp", "combined:click and type"
We will introduce how to build them.

## OneSet task
Take click as example, assume there is a 'Geep car' in image {"id": 3, "caption": "the blue polygon shows a 'Geep car'", "center point": (123, 456)}
You may generate:
{
    "prompt": "You are using a auto-selection crop function, please right click on the car to select it.",
    "response": "I can see ..., ... so I should right click on it: \n\n```python\n\npyautogui.click(x=x1, y=x2, clicks=1, button='right')\n```",
    "coordinate_map": {"x1": 123, "x2": 456},
    "used_elements": [3],
    "action-type": "click"
}
Remember to be diverse across all parameters (left, right click, num clicks, etc.)
You can use every information you can find in the information dict, not just center point.
For example, you can use the boundary polygon, if you see the left is the car's head and you can use the most left point in the given boundary, to generate a task like click on the head of the task.

## TwoSet and combined
This means we need at least 2 coordinates for a task.
This can be use the bbox of one region: task like 'drag a bounding box for the red house on the left of the image'
You can also use two coordinates of the boundary of one element like 'drag an arrow from the head of the car to the tail' You can also use coordinates from two regions.
You can also do calculation, like assuming you are using a slim waist/face function, you will need to pick a point near the face and drag from outside of the boundary to inside.
here is an example:
{
    "prompt": "I have already crop the house in the image, please drag the center of the house to the position of the car to cover the car.",
    "response": "I can see ..., ... so I should drag from xx to xx: \n\n```python\n\npyautogui.moveTo(x=x1, y=y1)\npyautogui.dragTo(x=x2, y=y2)\n```",
    "coordinate_map": {"x1": 345, "y1": 891, "x2": 732, "y2": 724},
    "used_elements": [3, 5],
    "action-type": "combined:moveTo and dragTo"
}

## NSet
This only contain 2 types of task: (1) drag the mouse to select the boundary of the region. (2) draw to fill the content of the region.
This 2 task is usually used for cropping or masking, eraing parts of the image.
The boundary polygon in the information is an ordered list of points. If the region' space is large, you can just use that, if the space is small, you can sample some of the points in order.
For the second task, you can change the order of the boundary, then it will be a left right left right trail to mask the whole image:
e.g., the boundary is : [p1, p2, p3, ... , p19, p20], then use [p1, p2, p20, p3, p19, p4, p18, ...] will draw and mask the reigion.
here is an example:
{
    "prompt": "Now I am using the image erase tool, I need to draw to cover the region of the man in yellow.",
    "response": "I can see ..., ... so I should drag to ...: \n\n```python\n\npyautogui.mouseDown(x=x1, y=y1)\npyautogui.moveTo(x=x2, y=y2)\n......pyautogui.moveTo(x=x13, y=y13)\npyautogui.mouseUp()\n```",
    "coordinate_map": {"x1": 345, "y1": 891, "x2": 732, "y2": 724......, "x13": 14, "y13": 532},
    "used_elements": [4],
    "action-type": "combined:mouseDown NxmoveTo and mouseUp"
}

# Styling
**IMPORTANT: the above example is only to help you understand the task. For the style and other requirements of the prompt and response, please refer to the following standards!!! **

## prompt
- The style of the prompt should be diverse. It can be a direct and clear request. It can also be a first-person question with user context, or it can be a vague request.
- If the corresponding function in PyAutoGUI has parameters, the task needs to cover as many parameters as possible. However, the prompt and response must be consistent. For example, if the prompt specifically requests a right-click (left-click can be default), the response should also include a right-click.
- Please put very clear context (like in the example, we say 'Now I am using the image erase tool, ...' to explain why we need this action) and it should be diverse!
- There may be phrases like 'the red polygon / bbox' in the caption, but all keywords like 'the polygon' 'the blue bbox' is NOT allowed in the prompt, because that is draw for you to understand, but those polygon are NOT in the original natural image.

## responses
The format of the response must be as follows:
"<chain of thought>\n\n```python\n<pyautogui code>\n```"
- In the python part, you don't need to import pyautogui, and you are NOT allow to generate any code that is not a pyautogui action. No comments allowed!
- The chain of thought part should be insightful for the prompt, and should be at least 2-3 sentences, more but useful is better.

# Number requirements

You need to generate **10** data in total, in which at least **5** must be OneSet task, and the other can be set dynamically according to the situation.

# Overall formatting

Input format: A screenshot and a list of dictionaries with keys "element_id", "description", and "click_point".

Output format: A list of output dictionaries as described above with the following JSON format
```json
[
    {
        "prompt": ...,
        "response": ...,
        "coordinate_map": ...,
        "used_elements": [...]
    },
    ...
]
```
)__PROMPT__";

}  // namespace prompt_data
}  // namespace actsynth
