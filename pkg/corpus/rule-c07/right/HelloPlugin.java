package plug;

public class HelloPlugin implements Plugin {
    public void run() {
    }
}
