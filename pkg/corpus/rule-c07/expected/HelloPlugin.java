package plug;

public class HelloPlugin implements Extension {
    public void run() {
    }
}
